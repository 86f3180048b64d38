"""The free associative superalgebra over finitely many generators.

Elements are finite maps from words (tuples of generator indices) to
rational coefficients.  Products concatenate words, so every bracket
expression can be expanded to a canonical element and an identity holds
identically exactly when its expansion is the zero element.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from superjacobi.core import parity, sign
from superjacobi.expr import (
    Anti,
    Comm,
    Expr,
    Gen,
    Identity,
    Phase,
    Prod,
    Scale,
    Sum,
    default_names,
    leaves,
)
from superjacobi.reports import VerificationResult

Word = Tuple[int, ...]


class ContextMismatch(ValueError):
    """Operands live in free algebras with different generator contexts."""


class UnboundGenerator(ValueError):
    """An expression uses a generator the context does not define."""


class FreeAlgebra:
    """Generator context: the parity of each free generator."""

    def __init__(self, parities: Sequence[int]):
        self.parities = tuple(parity(p) for p in parities)

    def __eq__(self, other):
        return isinstance(other, FreeAlgebra) and self.parities == other.parities

    def __hash__(self):
        return hash(self.parities)

    def __repr__(self):
        return f"FreeAlgebra({list(self.parities)})"

    @property
    def rank(self) -> int:
        return len(self.parities)

    def word_parity(self, w: Word) -> int:
        return sum(self.parities[i] for i in w) % 2

    def element(self, terms: Dict[Word, Fraction] | Iterable[Tuple[Word, object]]) -> "FreeElement":
        items = terms.items() if isinstance(terms, dict) else terms
        out: Dict[Word, Fraction] = {}
        for w, c in items:
            w = tuple(w)
            for i in w:
                if not 0 <= i < self.rank:
                    raise UnboundGenerator(f"generator {i} not in context of rank {self.rank}")
            out[w] = out.get(w, Fraction(0)) + Fraction(c)
        return FreeElement(self, {w: c for w, c in out.items() if c})

    def gen(self, i: int) -> "FreeElement":
        if not 0 <= i < self.rank:
            raise UnboundGenerator(f"generator {i} not in context of rank {self.rank}")
        return FreeElement(self, {(i,): Fraction(1)})

    def gens(self) -> Tuple["FreeElement", ...]:
        return tuple(self.gen(i) for i in range(self.rank))

    def one(self) -> "FreeElement":
        return FreeElement(self, {(): Fraction(1)})

    def zero(self) -> "FreeElement":
        return FreeElement(self, {})


def _word_key(w: Word):
    return (len(w), w)


class FreeElement:
    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: FreeAlgebra, terms: Dict[Word, Fraction]):
        self.algebra = algebra
        self.terms = terms

    def _check(self, other: "FreeElement"):
        if not isinstance(other, FreeElement):
            raise TypeError(f"expected FreeElement, got {type(other).__name__}")
        if other.algebra != self.algebra:
            raise ContextMismatch(f"{self.algebra!r} vs {other.algebra!r}")

    def __add__(self, other: "FreeElement") -> "FreeElement":
        self._check(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            v = out.get(w, 0) + c
            if v:
                out[w] = v
            else:
                out.pop(w, None)
        return FreeElement(self.algebra, out)

    def __neg__(self) -> "FreeElement":
        return FreeElement(self.algebra, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other: "FreeElement") -> "FreeElement":
        return self + (-other)

    def scale(self, c) -> "FreeElement":
        c = Fraction(c)
        if not c:
            return self.algebra.zero()
        return FreeElement(self.algebra, {w: c * v for w, v in self.terms.items()})

    def __rmul__(self, c) -> "FreeElement":
        return self.scale(c)

    def __mul__(self, other) -> "FreeElement":
        if not isinstance(other, FreeElement):
            return self.scale(other)
        self._check(other)
        out: Dict[Word, Fraction] = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                out[w] = out.get(w, 0) + c1 * c2
        return FreeElement(self.algebra, {w: c for w, c in out.items() if c})

    def __eq__(self, other) -> bool:
        if not isinstance(other, FreeElement):
            return NotImplemented
        return self.algebra == other.algebra and self.terms == other.terms

    def __hash__(self):
        return hash((self.algebra, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def sorted_terms(self) -> List[Tuple[Word, Fraction]]:
        return sorted(self.terms.items(), key=lambda t: _word_key(t[0]))

    def homogeneous_parts(self) -> Dict[int, "FreeElement"]:
        parts: Dict[int, Dict[Word, Fraction]] = {}
        for w, c in self.terms.items():
            parts.setdefault(self.algebra.word_parity(w), {})[w] = c
        return {p: FreeElement(self.algebra, t) for p, t in sorted(parts.items())}

    @property
    def parity(self) -> Optional[int]:
        """Parity if homogeneous (zero counts as even), else None."""
        ps = {self.algebra.word_parity(w) for w in self.terms}
        if len(ps) > 1:
            return None
        return ps.pop() if ps else 0

    def labelled(self, names: Sequence[str] | None = None) -> List[Tuple[str, Fraction]]:
        if names is None:
            names = default_names(self.algebra.rank)
        return [("".join(names[i] for i in w) or "1", c) for w, c in self.sorted_terms()]

    def __repr__(self):
        from superjacobi.reports import render_residual

        return f"FreeElement({render_residual(self.labelled())})"


def _bracket(a: FreeElement, b: FreeElement, anti: bool) -> FreeElement:
    a._check(b)
    out = a.algebra.zero()
    for pa, ha in a.homogeneous_parts().items():
        for pb, hb in b.homogeneous_parts().items():
            s = sign(pa * pb)
            s = s if anti else -s
            out = out + ha * hb + (hb * ha).scale(s)
    return out


def commutator(a: FreeElement, b: FreeElement) -> FreeElement:
    """[a, b] = ab - (-1)^(eps(a)eps(b)) ba, extended bilinearly over parity parts."""
    return _bracket(a, b, anti=False)


def anticommutator(a: FreeElement, b: FreeElement) -> FreeElement:
    """{a, b} = ab + (-1)^(eps(a)eps(b)) ba, extended bilinearly over parity parts."""
    return _bracket(a, b, anti=True)


def phase_factor(pairs: Iterable[Tuple[int, int]], parities: Sequence[int]) -> int:
    return sign(sum(parities[a] * parities[b] for a, b in pairs))


def expand(e: Expr, algebra: FreeAlgebra) -> FreeElement:
    """Expand an expression tree into canonical form in ``algebra``."""
    if isinstance(e, Gen):
        return algebra.gen(e.index)
    if isinstance(e, Prod):
        out = algebra.one()
        for f in e.factors:
            out = out * expand(f, algebra)
        return out
    if isinstance(e, Comm):
        return commutator(expand(e.left, algebra), expand(e.right, algebra))
    if isinstance(e, Anti):
        return anticommutator(expand(e.left, algebra), expand(e.right, algebra))
    if isinstance(e, Scale):
        return expand(e.expr, algebra).scale(e.coeff)
    if isinstance(e, Phase):
        _require_bound(e, algebra)
        return expand(e.expr, algebra).scale(phase_factor(e.pairs, algebra.parities))
    if isinstance(e, Sum):
        out = algebra.zero()
        for t in e.terms:
            out = out + expand(t, algebra)
        return out
    raise TypeError(f"not an expression node: {e!r}")


def _require_bound(e: Phase, algebra: FreeAlgebra):
    for a, b in e.pairs:
        if not (0 <= a < algebra.rank and 0 <= b < algebra.rank):
            raise UnboundGenerator(f"phase refers to generator outside rank {algebra.rank}")


def expand_raw(e: Expr, parities: Sequence[int]) -> List[Tuple[Fraction, Word]]:
    """Expansion into signed words before any cancellation.

    Only valid for trees whose bracket operands are parity-homogeneous
    (true for every multilinear identity); the parity of each operand is
    read from its first raw term.
    """
    if isinstance(e, Gen):
        return [(Fraction(1), (e.index,))]
    if isinstance(e, Prod):
        out = [(Fraction(1), ())]
        for f in e.factors:
            out = [(c1 * c2, w1 + w2) for c1, w1 in out for c2, w2 in expand_raw(f, parities)]
        return out
    if isinstance(e, (Comm, Anti)):
        left, right = expand_raw(e.left, parities), expand_raw(e.right, parities)
        if not left or not right:
            return []
        pa = sum(parities[i] for i in left[0][1]) % 2
        pb = sum(parities[i] for i in right[0][1]) % 2
        s = sign(pa * pb) * (1 if isinstance(e, Anti) else -1)
        out = []
        for c1, w1 in left:
            for c2, w2 in right:
                out.append((c1 * c2, w1 + w2))
                out.append((s * c1 * c2, w2 + w1))
        return out
    if isinstance(e, Scale):
        return [(e.coeff * c, w) for c, w in expand_raw(e.expr, parities)]
    if isinstance(e, Phase):
        s = phase_factor(e.pairs, parities)
        return [(s * c, w) for c, w in expand_raw(e.expr, parities)]
    if isinstance(e, Sum):
        return [t for term in e.terms for t in expand_raw(term, parities)]
    raise TypeError(f"not an expression node: {e!r}")


def parity_assignments(n: int) -> Iterator[Tuple[int, ...]]:
    return itertools.product((0, 1), repeat=n)


def check_identity(ident: Identity, parities: Sequence[int] | None = None) -> VerificationResult:
    """Expand ``ident`` for one parity assignment (default all even)."""
    if parities is None:
        parities = (0,) * ident.arity
    parities = tuple(parities)
    if len(parities) < ident.arity:
        raise UnboundGenerator(
            f"{ident.name} needs {ident.arity} generator parities, got {len(parities)}"
        )
    for i in leaves(ident.expr):
        if i >= len(parities):
            raise UnboundGenerator(f"{ident.name}: generator {i} is unbound")
    algebra = FreeAlgebra(parities)
    res = expand(ident.expr, algebra)
    return VerificationResult(
        name=ident.name,
        holds=res.is_zero(),
        parities=parities,
        residual=res.labelled(default_names(ident.arity)),
    )


def check_identity_all(ident: Identity) -> List[VerificationResult]:
    """All 2**arity parity assignments for graded identities, all-even otherwise."""
    if not ident.graded:
        return [check_identity(ident)]
    return [check_identity(ident, p) for p in parity_assignments(ident.arity)]
