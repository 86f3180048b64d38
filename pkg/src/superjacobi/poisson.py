"""Poisson superbracket on polynomials over a flat even symplectic superspace.

Coordinates are even ``z1..zp`` and odd ``theta1..thetaq`` (``t1`` is
accepted as shorthand).  The bracket is

    {F, G} = sum_ab (F d_R/du^a) pi^ab (d_L/du^b G)

with right derivatives on ``F`` and left derivatives on ``G``.  The even
block ``pi^ij(z)`` is antisymmetric with polynomial entries in the even
coordinates; the odd block is a constant symmetric matrix.
"""

from __future__ import annotations

import itertools
import json
import random
import re
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from superjacobi.core import coeff_to_json, parse_coeff, sign
from superjacobi.reports import VerificationResult, render_residual

Monomial = Tuple[Tuple[int, ...], Tuple[int, ...]]  # (even exponents, ascending odd indices)


class ContextMismatch(ValueError):
    pass


class StructureError(ValueError):
    pass


def _odd_merge(a: Tuple[int, ...], b: Tuple[int, ...]) -> Optional[Tuple[int, Tuple[int, ...]]]:
    if set(a) & set(b):
        return None
    inversions = sum(1 for x in a for y in b if x > y)
    return sign(inversions), tuple(sorted(a + b))


def monomial_label(m: Monomial) -> str:
    exps, odd = m
    parts = [f"z{i + 1}" + (f"^{e}" if e > 1 else "") for i, e in enumerate(exps) if e]
    parts += [f"theta{a + 1}" for a in odd]
    return "*".join(parts) or "1"


def monomial_degree(m: Monomial) -> int:
    return sum(m[0]) + len(m[1])


def _order_key(m: Monomial):
    return (monomial_degree(m), tuple(-e for e in m[0]), m[1])


class SuperPolynomial:
    """Polynomial in commuting even and anticommuting odd coordinates."""

    __slots__ = ("n_even", "n_odd", "terms")

    def __init__(self, n_even: int, n_odd: int, terms: Optional[Dict[Monomial, Fraction]] = None):
        self.n_even = n_even
        self.n_odd = n_odd
        self.terms: Dict[Monomial, Fraction] = {}
        for m, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                if len(m[0]) != n_even or any(not 0 <= a < n_odd for a in m[1]) or list(m[1]) != sorted(set(m[1])):
                    raise ValueError(f"bad monomial {m!r} for {n_even} even / {n_odd} odd coordinates")
                self.terms[m] = c

    # construction
    @classmethod
    def constant(cls, n_even: int, n_odd: int, c=1) -> "SuperPolynomial":
        return cls(n_even, n_odd, {((0,) * n_even, ()): Fraction(c)})

    @classmethod
    def z(cls, n_even: int, n_odd: int, i: int) -> "SuperPolynomial":
        exps = tuple(int(k == i) for k in range(n_even))
        return cls(n_even, n_odd, {(exps, ()): Fraction(1)})

    @classmethod
    def theta(cls, n_even: int, n_odd: int, a: int) -> "SuperPolynomial":
        return cls(n_even, n_odd, {((0,) * n_even, (a,)): Fraction(1)})

    @classmethod
    def monomial(cls, n_even: int, n_odd: int, m: Monomial, c=1) -> "SuperPolynomial":
        return cls(n_even, n_odd, {m: Fraction(c)})

    def _same(self, other: "SuperPolynomial"):
        if (self.n_even, self.n_odd) != (other.n_even, other.n_odd):
            raise ContextMismatch(
                f"coordinate context ({self.n_even}|{self.n_odd}) vs ({other.n_even}|{other.n_odd})"
            )

    def _new(self, terms) -> "SuperPolynomial":
        return SuperPolynomial(self.n_even, self.n_odd, terms)

    def zero(self) -> "SuperPolynomial":
        return self._new({})

    # arithmetic
    def __add__(self, other: "SuperPolynomial") -> "SuperPolynomial":
        self._same(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return self._new(out)

    def __neg__(self) -> "SuperPolynomial":
        return self._new({m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "SuperPolynomial") -> "SuperPolynomial":
        return self + (-other)

    def scale(self, c) -> "SuperPolynomial":
        c = Fraction(c)
        return self._new({m: c * v for m, v in self.terms.items()})

    def __rmul__(self, c) -> "SuperPolynomial":
        return self.scale(c)

    def __mul__(self, other) -> "SuperPolynomial":
        if not isinstance(other, SuperPolynomial):
            return self.scale(other)
        self._same(other)
        out: Dict[Monomial, Fraction] = {}
        for (e1, o1), c1 in self.terms.items():
            for (e2, o2), c2 in other.terms.items():
                hit = _odd_merge(o1, o2)
                if hit is None:
                    continue
                s, odd = hit
                m = (tuple(a + b for a, b in zip(e1, e2)), odd)
                out[m] = out.get(m, 0) + s * c1 * c2
        return self._new(out)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SuperPolynomial):
            return NotImplemented
        return (self.n_even, self.n_odd) == (other.n_even, other.n_odd) and self.terms == other.terms

    def __hash__(self):
        return hash((self.n_even, self.n_odd, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    # grading
    @property
    def parity(self) -> Optional[int]:
        ps = {len(o) % 2 for _, o in self.terms}
        if len(ps) > 1:
            return None
        return ps.pop() if ps else 0

    def parts(self) -> List[Tuple[int, "SuperPolynomial"]]:
        """Nonzero homogeneous components as (parity, polynomial)."""
        split: Dict[int, Dict] = {0: {}, 1: {}}
        for m, c in self.terms.items():
            split[len(m[1]) % 2][m] = c
        return [(p, self._new(t)) for p, t in split.items() if t]

    def degree(self) -> int:
        return max((monomial_degree(m) for m in self.terms), default=0)

    def depends_on_odd(self) -> bool:
        return any(o for _, o in self.terms)

    # derivatives
    def d_even(self, i: int) -> "SuperPolynomial":
        out = {}
        for (exps, odd), c in self.terms.items():
            if exps[i]:
                e = list(exps)
                e[i] -= 1
                out[(tuple(e), odd)] = c * exps[i]
        return self._new(out)

    def _d_odd(self, a: int, right: bool) -> "SuperPolynomial":
        out = {}
        for (exps, odd), c in self.terms.items():
            if a in odd:
                pos = odd.index(a)
                moves = len(odd) - 1 - pos if right else pos
                out[(exps, odd[:pos] + odd[pos + 1:])] = sign(moves) * c
        return self._new(out)

    def d_left(self, a: int) -> "SuperPolynomial":
        """Left derivative in theta_a: move theta_a to the front, then drop it."""
        return self._d_odd(a, right=False)

    def d_right(self, a: int) -> "SuperPolynomial":
        """Right derivative in theta_a: move theta_a to the end, then drop it."""
        return self._d_odd(a, right=True)

    # rendering
    def sorted_terms(self) -> List[Tuple[Monomial, Fraction]]:
        return sorted(self.terms.items(), key=lambda kv: _order_key(kv[0]))

    def labelled(self) -> List[Tuple[str, Fraction]]:
        return [(monomial_label(m), c) for m, c in self.sorted_terms()]

    def __str__(self) -> str:
        return render_residual(self.labelled())

    def __repr__(self) -> str:
        return f"SuperPolynomial({self.n_even}|{self.n_odd}: {self})"


_FACTOR = re.compile(r"^(?:(z|theta|t)(\d+)(?:\^(\d+))?|(\d+(?:/\d+)?))$")


def parse_poly(text: str, n_even: int, n_odd: int) -> SuperPolynomial:
    """Read strings such as ``"z1 - 2*z2^3"`` or ``"3/2*z1*theta2 + theta1*theta2"``.

    Factors multiply left to right, so ``"theta2*theta1"`` is
    ``-theta1*theta2``.
    """
    src = text.replace(" ", "")
    if not src:
        raise ValueError("empty polynomial")
    pieces = re.findall(r"[+-]?[^+-]+", src)
    if "".join(pieces) != src:
        raise ValueError(f"cannot parse polynomial {text!r}")
    total = SuperPolynomial(n_even, n_odd)
    for piece in pieces:
        s = -1 if piece.startswith("-") else 1
        body = piece.lstrip("+-")
        term = SuperPolynomial.constant(n_even, n_odd, s)
        for factor in body.split("*"):
            m = _FACTOR.match(factor)
            if not m:
                raise ValueError(f"bad factor {factor!r} in {text!r}")
            kind, idx, power, number = m.groups()
            if number is not None:
                term = term.scale(parse_coeff(number))
                continue
            k = int(idx) - 1
            power = int(power) if power else 1
            if kind == "z":
                if not 0 <= k < n_even:
                    raise ValueError(f"z{idx} outside {n_even} even coordinates")
                var = SuperPolynomial.z(n_even, n_odd, k)
            else:
                if not 0 <= k < n_odd:
                    raise ValueError(f"theta{idx} outside {n_odd} odd coordinates")
                var = SuperPolynomial.theta(n_even, n_odd, k)
            for _ in range(power):
                term = term * var
        total = total + term
    return total


# -- structures ----------------------------------------------------------------

@dataclass
class PoissonStructure:
    """Bivector: ``pi_even[(i, j)]`` polynomial in z (antisymmetric),
    ``pi_odd[(a, b)]`` constant (symmetric).  Both orders are stored."""

    n_even: int
    n_odd: int
    pi_even: Dict[Tuple[int, int], SuperPolynomial] = field(default_factory=dict)
    pi_odd: Dict[Tuple[int, int], Fraction] = field(default_factory=dict)
    name: str = ""

    def __post_init__(self):
        for (i, j), v in list(self.pi_even.items()):
            if not (0 <= i < self.n_even and 0 <= j < self.n_even):
                raise StructureError(f"even index ({i}, {j}) out of range")
            if (v.n_even, v.n_odd) != (self.n_even, self.n_odd):
                raise StructureError(f"pi^{i}{j} lives in another coordinate context")
            if v.depends_on_odd():
                raise StructureError(f"pi^{i}{j} depends on odd coordinates")
            if i == j and not v.is_zero():
                raise StructureError(f"diagonal entry pi^{i}{i} must vanish")
            if (j, i) in self.pi_even and self.pi_even[(j, i)] != -v:
                raise StructureError(f"pi^{i}{j} and pi^{j}{i} are not antisymmetric")
        for (a, b), v in list(self.pi_odd.items()):
            if not (0 <= a < self.n_odd and 0 <= b < self.n_odd):
                raise StructureError(f"odd index ({a}, {b}) out of range")
            if (b, a) in self.pi_odd and self.pi_odd[(b, a)] != v:
                raise StructureError(f"omega^{a}{b} and omega^{b}{a} are not symmetric")
        even = {}
        for (i, j), v in self.pi_even.items():
            if not v.is_zero():
                even[(i, j)], even[(j, i)] = v, -v
        odd = {}
        for (a, b), v in self.pi_odd.items():
            v = Fraction(v)
            if v:
                odd[(a, b)] = odd[(b, a)] = v
        self.pi_even, self.pi_odd = even, odd

    @property
    def constant(self) -> bool:
        return all(v.degree() == 0 for v in self.pi_even.values())

    def matrix(self) -> Optional[List[List[Fraction]]]:
        """The full constant bivector matrix, or None if coordinate-dependent."""
        if not self.constant:
            return None
        n = self.n_even + self.n_odd
        M = [[Fraction(0)] * n for _ in range(n)]
        for (i, j), v in self.pi_even.items():
            M[i][j] = next(iter(v.terms.values()))
        for (a, b), v in self.pi_odd.items():
            M[self.n_even + a][self.n_even + b] = v
        return M

    @property
    def nondegenerate(self) -> bool:
        M = self.matrix()
        return M is not None and _rank(M) == len(M)

    def coordinates(self) -> List[SuperPolynomial]:
        return [SuperPolynomial.z(self.n_even, self.n_odd, i) for i in range(self.n_even)] + [
            SuperPolynomial.theta(self.n_even, self.n_odd, a) for a in range(self.n_odd)
        ]

    def parse(self, text: str) -> SuperPolynomial:
        return parse_poly(text, self.n_even, self.n_odd)

    def to_dict(self) -> Dict:
        d = {"even": self.n_even, "odd": self.n_odd}
        if self.name:
            d = {"name": self.name, **d}
        d["pi_even"] = [[i, j, str(v)] for (i, j), v in sorted(self.pi_even.items()) if i < j]
        d["pi_odd"] = [[a, b, coeff_to_json(v)] for (a, b), v in sorted(self.pi_odd.items()) if a <= b]
        return d


def _rank(M: List[List[Fraction]]) -> int:
    rows = [list(r) for r in M]
    rank, ncols = 0, len(rows[0]) if rows else 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        for r in range(len(rows)):
            if r != rank and rows[r][col]:
                f = rows[r][col] / rows[rank][col]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def canonical(p: int, q: int = 0) -> PoissonStructure:
    """Darboux pairs (z_i, z_{i+p}) with pi = 1, and q odd coordinates with omega = identity."""
    n = 2 * p
    one = SuperPolynomial.constant(n, q, 1)
    even = {(i, i + p): one for i in range(p)}
    odd = {(a, a): Fraction(1) for a in range(q)}
    return PoissonStructure(n, q, even, odd, name=f"canonical(p={p}, q={q})")


def counterexample() -> PoissonStructure:
    """pi^12 = z1, pi^13 = 1, pi^23 = 0 on three even coordinates."""
    z1 = SuperPolynomial.z(3, 0, 0)
    return PoissonStructure(3, 0, {(0, 1): z1, (0, 2): SuperPolynomial.constant(3, 0)}, name="non-Jacobi bivector")


def structure_from_dict(d: Dict) -> PoissonStructure:
    try:
        n_even, n_odd = int(d["even"]), int(d["odd"])
        if n_even < 0 or n_odd < 0:
            raise StructureError("coordinate counts must be non-negative")
        even = {}
        for i, j, text in d.get("pi_even", []):
            v = parse_poly(str(text), n_even, n_odd)
            if (i, j) in even:
                raise StructureError(f"duplicate entry ({i}, {j})")
            even[(int(i), int(j))] = v
        odd = {}
        for a, b, c in d.get("pi_odd", []):
            odd[(int(a), int(b))] = parse_coeff(c)
        return PoissonStructure(n_even, n_odd, even, odd, name=str(d.get("name", "")))
    except StructureError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise StructureError(f"bad structure description: {exc}") from exc


def load_structure(path: Union[str, Path]) -> PoissonStructure:
    return structure_from_dict(json.loads(Path(path).read_text()))


def is_structure_dict(d: Dict) -> bool:
    return isinstance(d, dict) and "even" in d and "odd" in d


# -- bracket -----------------------------------------------------------------

def _check(S: PoissonStructure, *polys: SuperPolynomial):
    for P in polys:
        if (P.n_even, P.n_odd) != (S.n_even, S.n_odd):
            raise ContextMismatch(
                f"polynomial over ({P.n_even}|{P.n_odd}) used with structure over ({S.n_even}|{S.n_odd})"
            )


def poisson_bracket(S: PoissonStructure, F: SuperPolynomial, G: SuperPolynomial) -> SuperPolynomial:
    _check(S, F, G)
    out = F.zero()
    dF: Dict[int, SuperPolynomial] = {}
    dG: Dict[int, SuperPolynomial] = {}
    for (i, j), pij in sorted(S.pi_even.items()):
        if i not in dF:
            dF[i] = F.d_even(i)
        if j not in dG:
            dG[j] = G.d_even(j)
        if dF[i].terms and dG[j].terms:
            out = out + dF[i] * pij * dG[j]
    for (a, b), w in sorted(S.pi_odd.items()):
        left, right = F.d_right(a), G.d_left(b)
        if left.terms and right.terms:
            out = out + (left * right).scale(w)
    return out


def jacobiator(S: PoissonStructure, F: SuperPolynomial, G: SuperPolynomial, H: SuperPolynomial) -> SuperPolynomial:
    """{F,{G,H}}(-1)^(fh) + {H,{F,G}}(-1)^(hg) + {G,{H,F}}(-1)^(gf), summed over
    homogeneous components."""
    _check(S, F, G, H)
    pb = lambda A, B: poisson_bracket(S, A, B)  # noqa: E731
    out = F.zero()
    for (f, Fp), (g, Gp), (h, Hp) in itertools.product(F.parts(), G.parts(), H.parts()):
        out = out + pb(Fp, pb(Gp, Hp)).scale(sign(f * h))
        out = out + pb(Hp, pb(Fp, Gp)).scale(sign(h * g))
        out = out + pb(Gp, pb(Hp, Fp)).scale(sign(g * f))
    return out


def _antisymmetry(S, F, G, H):
    out = F.zero()
    for (f, Fp), (g, Gp) in itertools.product(F.parts(), G.parts()):
        out = out + poisson_bracket(S, Fp, Gp) + poisson_bracket(S, Gp, Fp).scale(sign(f * g))
    return out


def _linearity(S, F, G, H):
    pb = lambda A, B: poisson_bracket(S, A, B)  # noqa: E731
    third = Fraction(1, 3)
    return (
        pb(F + G, H) - pb(F, H) - pb(G, H)
        + pb(F, G + H) - pb(F, G) - pb(F, H)
        + pb(F.scale(third), G) - pb(F, G).scale(third)
    )


def _leibniz(S, F, G, H):
    out = F.zero()
    for (g, Gp), (h, Hp) in itertools.product(G.parts(), H.parts()):
        out = out + poisson_bracket(S, F, Gp * Hp) - poisson_bracket(S, F, Gp) * Hp
        out = out - (poisson_bracket(S, F, Hp) * Gp).scale(sign(h * g))
    return out


def _fundamental(S, F, G, H):
    out = F.zero()
    for (f, Fp), (g, Gp), (h, Hp) in itertools.product(F.parts(), G.parts(), H.parts()):
        out = out + poisson_bracket(S, Fp, Gp * Hp).scale(sign(f * h))
        out = out + poisson_bracket(S, Hp, Fp * Gp).scale(sign(h * g))
        out = out + poisson_bracket(S, Gp, Hp * Fp).scale(sign(g * f))
    return out


PROPERTIES = {
    "PBant": _antisymmetry,
    "linearity": _linearity,
    "PBL": _leibniz,
    "PBJI": jacobiator,
    "PBnI": _fundamental,
}

Triple = Tuple[SuperPolynomial, SuperPolynomial, SuperPolynomial]


@dataclass
class PBReport:
    structure: str
    samples: int
    results: Dict[str, VerificationResult]

    @property
    def ok(self) -> bool:
        return all(r.holds for r in self.results.values())

    def to_record(self) -> Dict:
        return {
            "structure": self.structure,
            "samples": self.samples,
            "ok": self.ok,
            "properties": [r.to_record() for r in self.results.values()],
        }

    def lines(self) -> List[str]:
        out = [f"Poisson bracket properties for {self.structure} ({self.samples} sample triples)"]
        out += [f"  {r.describe()}" for r in self.results.values()]
        return out


def check_pb_properties(
    S: PoissonStructure, samples: Sequence[Triple], properties: Iterable[str] = tuple(PROPERTIES)
) -> PBReport:
    results: Dict[str, VerificationResult] = {}
    for name in properties:
        fn = PROPERTIES[name]
        result = VerificationResult(name, True, checked=len(samples))
        for F, G, H in samples:
            r = fn(S, F, G, H)
            if not r.is_zero():
                result = VerificationResult(
                    name, False, residual=r.labelled(), witness=(str(F), str(G), str(H)), checked=len(samples)
                )
                break
        results[name] = result
    return PBReport(S.name, len(samples), results)


# -- samples -----------------------------------------------------------------

def monomials(n_even: int, n_odd: int, max_degree: int) -> List[Monomial]:
    out = []
    for k in range(min(n_odd, max_degree) + 1):
        for odd in itertools.combinations(range(n_odd), k):
            for exps in itertools.product(range(max_degree - k + 1), repeat=n_even):
                if sum(exps) + k <= max_degree:
                    out.append((exps, odd))
    return sorted(out, key=_order_key)


def monomial_triples(S: PoissonStructure, max_total_degree: int = 3) -> List[Triple]:
    """All ordered triples of monomials whose degrees add up to at most ``max_total_degree``."""
    mons = monomials(S.n_even, S.n_odd, max_total_degree)
    polys = [(monomial_degree(m), SuperPolynomial.monomial(S.n_even, S.n_odd, m)) for m in mons]
    out = []
    for (d1, a), (d2, b), (d3, c) in itertools.product(polys, repeat=3):
        if d1 + d2 + d3 <= max_total_degree:
            out.append((a, b, c))
    return out


def random_polynomial(rng: random.Random, n_even: int, n_odd: int, max_degree: int = 3,
                      parity: Optional[int] = None, max_terms: int = 3) -> SuperPolynomial:
    """Random polynomial, homogeneous in parity (random parity unless given)."""
    if parity is None:
        parity = rng.randint(0, 1) if n_odd else 0
    pool = [m for m in monomials(n_even, n_odd, max_degree) if len(m[1]) % 2 == parity]
    P = SuperPolynomial(n_even, n_odd)
    if not pool:
        return P
    for _ in range(rng.randint(1, max_terms)):
        P = P + SuperPolynomial.monomial(n_even, n_odd, rng.choice(pool), rng.choice((-3, -2, -1, 1, 2, 3)))
    return P


def random_triples(S: PoissonStructure, count: int, seed: int, max_degree: int = 3) -> List[Triple]:
    rng = random.Random(seed)
    return [
        tuple(random_polynomial(rng, S.n_even, S.n_odd, max_degree) for _ in range(3))  # type: ignore[misc]
        for _ in range(count)
    ]


def random_structure(rng: random.Random, n_even: int, n_odd: int = 0, degree: int = 1) -> PoissonStructure:
    """Random bivector with polynomial even entries of the given degree in z
    and a random constant symmetric odd block; Jacobi is not imposed."""
    even = {}
    for i, j in itertools.combinations(range(n_even), 2):
        even[(i, j)] = random_polynomial(rng, n_even, 0, degree, parity=0)
        even[(i, j)] = SuperPolynomial(n_even, n_odd, even[(i, j)].terms)
    odd = {}
    for a, b in itertools.combinations_with_replacement(range(n_odd), 2):
        odd[(a, b)] = Fraction(rng.randint(-2, 2))
    return PoissonStructure(n_even, n_odd, even, odd, name="random bivector")


def sample_set(S: PoissonStructure, seed: int = 0, random_count: int = 50) -> List[Triple]:
    """Exhaustive low-degree monomial triples plus a seeded random set."""
    return monomial_triples(S) + random_triples(S, random_count, seed)
