"""From a bracket/antibracket pair back to an associative product.

Given tables ``f`` (graded antisymmetric) and ``c`` (graded symmetric),
the product ``X o Y = ([X, Y] + {X, Y}) / 2`` has structure constants
``(f + c) / 2``.  If the two double-bracket identities JIantiI(s) and
JIantiII(s) hold for the brackets, that product is associative.
:func:`proof_chain_check` replays the argument symbolically.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from superjacobi.catalog import CATALOG
from superjacobi.expr import Expr, anti, comm, cyclic_sum, gens, phase, relabel
from superjacobi.formal import formal, formal_difference, labelled
from superjacobi.free import FreeAlgebra, expand, parity_assignments
from superjacobi.reports import DerivationReport, VerificationResult, render_residual
from superjacobi.structconst import (
    BracketTables,
    StructureTensor,
    check_associativity,
    check_identity_on_basis,
    decompose,
    ops_from_tables,
    random_tensor,
)

HALF = Fraction(1, 2)

HYPOTHESIS = ("JIantis", "JIantiIs")
DERIVED = ("JIs", "JIsI")


def reconstruct_product(B: BracketTables) -> StructureTensor:
    """F_ij^k = (f_ij^k + c_ij^k) / 2."""
    B.validate_symmetry()
    F: Dict = {}
    for table in (B.f, B.c):
        for key, v in table.items():
            F[key] = F.get(key, Fraction(0)) + HALF * v
    return StructureTensor(B.dim, B.parity, F, name=f"product from {B.name}".strip(), basis=B.basis)


@dataclass
class TheoremReport:
    name: str
    hypothesis: Dict[str, VerificationResult]
    conclusion: VerificationResult
    derived: Dict[str, VerificationResult] = field(default_factory=dict)

    @property
    def hypothesis_holds(self) -> bool:
        return all(r.holds for r in self.hypothesis.values())

    @property
    def conclusion_holds(self) -> bool:
        return self.conclusion.holds

    @property
    def implication_violated(self) -> bool:
        return self.hypothesis_holds and not self.conclusion_holds

    def to_record(self) -> Dict:
        return {
            "tables": self.name,
            "hypothesis": {
                "holds": self.hypothesis_holds,
                "identities": [r.to_record() for r in self.hypothesis.values()],
            },
            "conclusion": {"associative": self.conclusion_holds, "check": self.conclusion.to_record()},
            "derived": [r.to_record() for r in self.derived.values()],
            "implication_violated": self.implication_violated,
        }

    def lines(self) -> List[str]:
        out = [f"theorem check for {self.name or 'tables'}"]
        out.append(f"  hypothesis (JIantiI & JIantiII): {'holds' if self.hypothesis_holds else 'fails'}")
        out += [f"    {r.describe()}" for r in self.hypothesis.values()]
        out.append(f"  conclusion (reconstructed product associative): {'yes' if self.conclusion_holds else 'no'}")
        out.append(f"    {self.conclusion.describe()}")
        if self.derived:
            out.append("  derived identities:")
            out += [f"    {r.describe()}" for r in self.derived.values()]
        out.append(f"  hypothesis => conclusion: {'VIOLATED' if self.implication_violated else 'not violated'}")
        return out


def theorem2_check(B: BracketTables) -> TheoremReport:
    """Test the double-bracket hypothesis on every basis triple, rebuild the
    product and test its associativity."""
    B.validate_symmetry()
    ops = ops_from_tables(B)
    hyp = {n: check_identity_on_basis(CATALOG[n], ops) for n in HYPOTHESIS}
    derived = {n: check_identity_on_basis(CATALOG[n], ops) for n in DERIVED}
    conclusion = check_associativity(reconstruct_product(B))
    return TheoremReport(B.name, hyp, conclusion, derived)


# -- symbolic replay of the associativity argument -----------------------------

X, Y, Z = gens(3)


def _circ(a: Expr, b: Expr) -> Expr:
    return HALF * (comm(a, b) + anti(a, b))


def _ass3() -> Expr:
    # moving Z to the front of [[X,Y],Z] etc. costs (-1)^((e(X)+e(Y))e(Z))
    def zfront(e):
        return phase(e, (X, Z), (Y, Z))

    return (
        -zfront(comm(Z, comm(X, Y)))
        - comm(X, comm(Y, Z))
        - zfront(comm(Z, anti(X, Y)))
        - comm(X, anti(Y, Z))
        + zfront(anti(Z, comm(X, Y)))
        - anti(X, comm(Y, Z))
        + zfront(anti(Z, anti(X, Y)))
        - anti(X, anti(Y, Z))
    )


def _ass4() -> Expr:
    def zfront(e):
        return phase(e, (X, Z), (Y, Z))

    return -zfront(comm(Z, anti(X, Y))) - comm(X, anti(Y, Z)) + zfront(anti(Z, comm(X, Y))) - anti(X, comm(Y, Z))


_YZX = {0: 1, 1: 2, 2: 0}  # (X, Y, Z) -> (Y, Z, X)
_ZXY = {0: 2, 1: 0, 2: 1}  # (X, Y, Z) -> (Z, X, Y)


def proof_chain_check() -> DerivationReport:
    """Replay the associativity argument on formal brackets, for all eight
    parity assignments of (X, Y, Z).

    1. 4((XoY)oZ - Xo(YoZ)) equals the 8-term double-bracket sum.
    2. Subtracting (-1)^(e(X)e(Z)) (JIantiII(Y,Z,X) - JI(X,Y,Z)), with JI
       taken as the cyclic sum of JIantiII, leaves the 4-term form.
    3. Adding (-1)^(e(X)e(Z)) (JIantiI(X,Y,Z) + JIantiI(Z,X,Y)) leaves zero.

    Formal brackets obey only bilinearity and graded symmetry, so a zero
    remainder shows associativity follows from the two hypothesis
    identities alone.  Every expression is also expanded in the free
    algebra as a consistency check.
    """
    anti1 = CATALOG["JIantis"].expr
    anti2 = CATALOG["JIantiIs"].expr
    jacobi = cyclic_sum(anti2, 3)
    lhs = 4 * (_circ(_circ(X, Y), Z) - _circ(X, _circ(Y, Z)))
    ass3, ass4 = _ass3(), _ass4()
    remove_double = phase(relabel(anti2, _YZX) - jacobi, (X, Z))
    remove_mixed = phase(anti1 + relabel(anti1, _ZXY), (X, Z))

    report = DerivationReport("associativity from JIantiI and JIantiII")
    steps: List[Tuple[str, Callable[[Sequence[int]], Dict]]] = [
        ("JI = cyclic sum of JIantiII", lambda p: formal_difference(formal(jacobi, p), formal(CATALOG["JIs"].expr, p))),
        ("(ass3): 4((XY)Z - X(YZ)) = 8-term bracket sum", lambda p: formal_difference(formal(lhs, p), formal(ass3, p))),
        ("(ass4): ass3 minus JIantiII/JI terms = 4-term form",
         lambda p: formal_difference(formal(ass3 - remove_double, p), formal(ass4, p))),
        ("final: ass4 plus JIantiI terms = 0", lambda p: formal(ass4 + remove_mixed, p)),
        ("whole chain: 4((XY)Z - X(YZ)) - hypothesis combination = 0",
         lambda p: formal(lhs - remove_double + remove_mixed, p)),
    ]
    for name, residual in steps:
        bad = []
        for par in parity_assignments(3):
            diff = residual(par)
            if diff:
                bad.append(f"parities {par}: {render_residual(labelled(diff, 3))}")
        report.add(name, not bad, "8 parity assignments" + ("; " + "; ".join(bad) if bad else ""))

    bad = []
    for par in parity_assignments(3):
        alg = FreeAlgebra(par)
        x, y, z = alg.gens()
        assoc = ((x * y) * z - x * (y * z)).scale(4)
        for e in (lhs, ass3, ass4, remove_double, remove_mixed):
            if expand(e, alg) != (assoc if e is lhs else alg.zero()):
                bad.append(str(par))
                break
    report.add("free-algebra expansion of every step", not bad, "; ".join(bad))
    return report


# -- fuzzing the theorem -----------------------------------------------------

def _unital_pieces() -> Dict[int, List[StructureTensor]]:
    from superjacobi import fixtures

    def t(dim, par, entries, name):
        return StructureTensor(dim, par, {k: Fraction(v) for k, v in entries.items()}, name=name)

    pieces = {
        1: [
            t(1, (0,), {(0, 0, 0): 1}, "Q"),
            t(1, (0,), {}, "null1"),
            t(1, (1,), {}, "odd null1"),
        ],
        2: [
            t(2, (0, 0), {(0, 0, 0): 1, (0, 1, 1): 1, (1, 0, 1): 1}, "Q[x]/x^2"),
            t(2, (0, 1), {(0, 0, 0): 1, (0, 1, 1): 1, (1, 0, 1): 1}, "Grassmann(t)"),
            t(2, (0, 0), {(0, 0, 0): 1, (0, 1, 1): 1, (1, 0, 1): 1, (1, 1, 0): 1}, "Q[Z2]"),
            t(2, (0, 0), {(0, 0, 1): 1}, "x,x^2"),
        ],
        3: [
            t(3, (0, 0, 0), {(0, 0, 0): 1, (0, 1, 1): 1, (1, 2, 1): 1, (2, 2, 2): 1}, "upper triangular"),
            t(3, (0, 0, 0), {(0, 0, 0): 1, (0, 1, 1): 1, (1, 0, 1): 1, (0, 2, 2): 1, (2, 0, 2): 1,
                             (1, 1, 2): 1}, "Q[x]/x^3"),
            t(3, (0, 1, 1), {(0, 0, 0): 1, (0, 1, 1): 1, (1, 0, 1): 1, (0, 2, 2): 1, (2, 0, 2): 1}, "Q+odd square-zero"),
        ],
        4: [fixtures.gl2(), fixtures.quaternions(), fixtures.grassmann2(), fixtures.gl11()],
    }
    return pieces


def direct_sum(parts: Sequence[StructureTensor]) -> StructureTensor:
    F: Dict = {}
    par: List[int] = []
    off = 0
    for A in parts:
        for (i, j, k), v in A.F.items():
            F[(i + off, j + off, k + off)] = v
        par += A.parity
        off += A.dim
    return StructureTensor(off, tuple(par), F, name=" + ".join(A.name for A in parts))


def _inverse(M: List[List[Fraction]]) -> List[List[Fraction]]:
    n = len(M)
    aug = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(M)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col])
        aug[col], aug[piv] = aug[piv], aug[col]
        pv = aug[col][col]
        aug[col] = [v / pv for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                fac = aug[r][col]
                aug[r] = [a - fac * b for a, b in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def change_basis(A: StructureTensor, P: List[List[Fraction]]) -> StructureTensor:
    """Structure constants in the basis T'_a = sum_i P[i][a] T_i (P parity-preserving)."""
    n = A.dim
    for i, a in itertools.product(range(n), repeat=2):
        if P[i][a] and A.parity[i] != A.parity[a]:
            raise ValueError("basis change mixes parities")
    Q = _inverse(P)
    F: Dict = {}
    for (i, j, k), v in A.F.items():
        for a in range(n):
            if not P[i][a]:
                continue
            for b in range(n):
                if not P[j][b]:
                    continue
                w = P[i][a] * P[j][b] * v
                for c in range(n):
                    if Q[c][k]:
                        F[(a, b, c)] = F.get((a, b, c), Fraction(0)) + w * Q[c][k]
    return StructureTensor(n, A.parity, F, name=A.name)


def permute_basis(A: StructureTensor, perm: Sequence[int]) -> StructureTensor:
    """Relabel basis element ``i`` as ``perm[i]``."""
    par = [0] * A.dim
    for i, p in enumerate(perm):
        par[p] = A.parity[i]
    F = {(perm[i], perm[j], perm[k]): v for (i, j, k), v in A.F.items()}
    return StructureTensor(A.dim, tuple(par), F, name=A.name)


def random_associative_tensor(rng: random.Random, dim: int) -> StructureTensor:
    """A known associative (super)algebra of the given dimension, as a direct
    sum of small pieces, in a random parity-preserving basis."""
    pieces = _unital_pieces()
    parts: List[StructureTensor] = []
    left = dim
    while left:
        size = rng.randint(1, min(left, 4))
        parts.append(rng.choice(pieces[size]))
        left -= size
    A = direct_sum(parts)
    P = [[Fraction(int(i == j)) for j in range(dim)] for i in range(dim)]
    for _ in range(3 * dim):
        a, b = rng.sample(range(dim), 2) if dim > 1 else (0, 0)
        if a == b or A.parity[a] != A.parity[b]:
            continue
        r = rng.choice((-2, -1, 1, 2))
        # column b += r * column a  (T'_b = T_b + r T_a)
        for i in range(dim):
            P[i][b] += r * P[i][a]
    A = change_basis(A, P)
    perm = list(range(dim))
    rng.shuffle(perm)
    return permute_basis(A, perm)


@dataclass
class Theorem2Fuzz:
    trials: int
    seed: int
    dims: Tuple[int, ...]
    roundtrip_failures: int
    hypothesis_failures: int
    conclusion_failures: int
    implication_violations: int
    random_checked: int
    random_hypothesis_holds: int
    examples: Dict[str, Dict]

    @property
    def ok(self) -> bool:
        return not (self.roundtrip_failures or self.hypothesis_failures
                    or self.conclusion_failures or self.implication_violations)

    def to_record(self) -> Dict:
        return {k: (list(v) if isinstance(v, tuple) else v) for k, v in self.__dict__.items()} | {"ok": self.ok}

    def lines(self) -> List[str]:
        return [
            f"theorem fuzz: dims={list(self.dims)} trials={self.trials} seed={self.seed}",
            f"  associative samples: round-trip failures {self.roundtrip_failures}, "
            f"hypothesis failures {self.hypothesis_failures}, non-associative {self.conclusion_failures}",
            f"  random tables: {self.random_checked} checked, hypothesis held on {self.random_hypothesis_holds}",
            f"  hypothesis => conclusion violations: {self.implication_violations}",
        ]


def fuzz_theorem2(dims: Sequence[int], trials: int, seed: int, random_tables: Optional[int] = None) -> Theorem2Fuzz:
    """Associative samples must round-trip through decompose/reconstruct and
    satisfy the hypothesis; random tables must never satisfy the hypothesis
    with a non-associative product."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    rng = random.Random(seed)
    dims = tuple(dims)
    rt = hyp_fail = concl_fail = viol = 0
    examples: Dict[str, Dict] = {}
    for _ in range(trials):
        A = random_associative_tensor(rng, rng.choice(dims))
        B = decompose(A)
        if reconstruct_product(B) != A:
            rt += 1
        rep = theorem2_check(B)
        hyp_fail += not rep.hypothesis_holds
        concl_fail += not rep.conclusion_holds
        viol += rep.implication_violated
    n_random = trials if random_tables is None else random_tables
    rand_hyp = 0
    for _ in range(n_random):
        dim = rng.choice(dims)
        par = tuple(rng.randint(0, 1) for _ in range(dim))
        rep = theorem2_check(decompose(random_tensor(rng, dim, par, rng.uniform(0.05, 0.5))))
        rand_hyp += rep.hypothesis_holds
        if rep.implication_violated:
            viol += 1
            examples.setdefault("violation", rep.to_record())
    return Theorem2Fuzz(trials, seed, dims, rt, hyp_fail, concl_fail, viol, n_random, rand_hyp, examples)
