"""Formal bracket expressions.

Here ``[a, b]`` and ``{a, b}`` are not expanded into words.  They are
treated as two independent bilinear operations that only obey the graded
symmetries

    [a, b] = -(-1)^(eps(a)eps(b)) [b, a],    {a, b} = (-1)^(eps(a)eps(b)) {b, a}

and products of generators are kept as associative words.  Two expressions
with equal formal term maps are equal in *every* algebra carrying such a
pair of operations, which is what derivations between identities need:
in the free associative algebra all of them expand to zero and comparing
expansions says nothing.

Canonical terms are nested tuples:
``("g", i)`` a generator, ``("p", (f1, f2, ...))`` a word of at least two
factors, ``("c", a, b)`` / ``("a", a, b)`` a bracket with ``a <= b``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from superjacobi.core import sign
from superjacobi.expr import Anti, Comm, Expr, Gen, Phase, Prod, Scale, Sum, default_names
from superjacobi.free import FreeAlgebra, expand, phase_factor

Term = tuple
FormalElement = Dict[Term, Fraction]


def term_parity(t: Term, parities: Sequence[int]) -> int:
    tag = t[0]
    if tag == "g":
        return parities[t[1]]
    if tag == "p":
        return sum(term_parity(f, parities) for f in t[1]) % 2
    return (term_parity(t[1], parities) + term_parity(t[2], parities)) % 2


def _factors(t: Term) -> Tuple[Term, ...]:
    return t[1] if t[0] == "p" else (t,)


def _product_term(a: Term, b: Term) -> Term:
    return ("p", _factors(a) + _factors(b))


def _bracket_term(kind: str, a: Term, b: Term, parities) -> Optional[Tuple[int, Term]]:
    if a <= b:
        if a == b:
            pa = term_parity(a, parities)
            # [a,a] = 0 for even a, {a,a} = 0 for odd a
            if (kind == "c" and pa == 0) or (kind == "a" and pa == 1):
                return None
        return 1, (kind, a, b)
    s = sign(term_parity(a, parities) * term_parity(b, parities))
    return (-s if kind == "c" else s), (kind, b, a)


def _accumulate(out: FormalElement, t: Term, c: Fraction):
    v = out.get(t, 0) + c
    if v:
        out[t] = v
    else:
        out.pop(t, None)


def formal(e: Expr, parities: Sequence[int]) -> FormalElement:
    """Canonical formal term map of ``e`` for the given generator parities."""
    if isinstance(e, Gen):
        return {("g", e.index): Fraction(1)}
    if isinstance(e, Prod):
        acc: Optional[FormalElement] = None
        for f in e.factors:
            fe = formal(f, parities)
            if acc is None:
                acc = fe
                continue
            nxt: FormalElement = {}
            for ta, ca in acc.items():
                for tb, cb in fe.items():
                    _accumulate(nxt, _product_term(ta, tb), ca * cb)
            acc = nxt
        return acc or {}
    if isinstance(e, (Comm, Anti)):
        kind = "c" if isinstance(e, Comm) else "a"
        left, right = formal(e.left, parities), formal(e.right, parities)
        out: FormalElement = {}
        for ta, ca in left.items():
            for tb, cb in right.items():
                hit = _bracket_term(kind, ta, tb, parities)
                if hit is not None:
                    s, t = hit
                    _accumulate(out, t, s * ca * cb)
        return out
    if isinstance(e, Scale):
        return {t: e.coeff * c for t, c in formal(e.expr, parities).items() if e.coeff}
    if isinstance(e, Phase):
        s = phase_factor(e.pairs, parities)
        return {t: s * c for t, c in formal(e.expr, parities).items()}
    if isinstance(e, Sum):
        out = {}
        for term in e.terms:
            for t, c in formal(term, parities).items():
                _accumulate(out, t, c)
        return out
    raise TypeError(f"not an expression node: {e!r}")


def formal_difference(a: FormalElement, b: FormalElement) -> FormalElement:
    out = dict(a)
    for t, c in b.items():
        _accumulate(out, t, -c)
    return out


def render_term(t: Term, names: Sequence[str]) -> str:
    tag = t[0]
    if tag == "g":
        return names[t[1]]
    if tag == "p":
        return "".join(render_term(f, names) for f in t[1])
    left, right = render_term(t[1], names), render_term(t[2], names)
    return f"[{left},{right}]" if tag == "c" else "{" + left + "," + right + "}"


def labelled(fe: FormalElement, arity: int) -> List[Tuple[str, Fraction]]:
    names = default_names(arity)
    return [(render_term(t, names), c) for t, c in sorted(fe.items())]


def generator_commutator_form(e: Expr, parities: Sequence[int]) -> Expr:
    """Rewrite nested commutators into sums of ``[X_a, word]``.

    Each commutator with a single generator on one side is turned so the
    generator sits on the left (graded antisymmetry), and its other operand
    is expanded into words in the free algebra.  Used to compare nested
    Jacobi-type identities with their word forms term by term.
    """
    if isinstance(e, Comm):
        if isinstance(e.left, Gen):
            g, other, s = e.left, e.right, 1
        elif isinstance(e.right, Gen):
            g, other = e.right, e.left
            algebra = FreeAlgebra(parities)
            p_other = expand(other, algebra).parity
            if p_other is None:
                raise ValueError("operand is not parity-homogeneous")
            s = -sign(p_other * parities[g.index])
        else:
            raise ValueError("commutator has no generator operand")
        algebra = FreeAlgebra(parities)
        terms = []
        for w, c in expand(other, algebra).sorted_terms():
            wexpr = Gen(w[0]) if len(w) == 1 else Prod(tuple(Gen(i) for i in w))
            terms.append(Scale(s * c, Comm(g, wexpr)))
        return Sum(tuple(terms))
    if isinstance(e, Scale):
        return Scale(e.coeff, generator_commutator_form(e.expr, parities))
    if isinstance(e, Phase):
        return Phase(e.pairs, generator_commutator_form(e.expr, parities))
    if isinstance(e, Sum):
        return Sum(tuple(generator_commutator_form(t, parities) for t in e.terms))
    raise ValueError(f"cannot rewrite node {type(e).__name__} into commutator-word form")
