"""Reference algebras built from their defining rules.

``python -m superjacobi.fixtures DIR`` writes them as JSON files; the
tests check that the shipped ``fixtures/*.json`` match these builders.
"""

from __future__ import annotations

import itertools
import sys
from fractions import Fraction
from pathlib import Path
from typing import Callable, Dict, List, Union

from superjacobi.poisson import PoissonStructure, canonical, counterexample
from superjacobi.structconst import BracketTables, StructureTensor, compact_json, dump_algebra


def gl2() -> StructureTensor:
    """2x2 rational matrix units e11, e12, e21, e22: e_ab e_cd = delta_bc e_ad."""
    units = [(0, 0), (0, 1), (1, 0), (1, 1)]
    F = {}
    for x, (a, b) in enumerate(units):
        for y, (c, d) in enumerate(units):
            if b == c:
                F[(x, y, units.index((a, d)))] = Fraction(1)
    return StructureTensor(4, (0, 0, 0, 0), F, name="gl(2,Q)", basis=("e11", "e12", "e21", "e22"))


def quaternions() -> StructureTensor:
    """Basis 1, i, j, k with i^2 = j^2 = k^2 = ijk = -1."""
    F = {}
    for a in range(4):
        F[(0, a, a)] = Fraction(1)
        F[(a, 0, a)] = Fraction(1)
    for a in (1, 2, 3):
        F[(a, a, 0)] = Fraction(-1)
    for a, b, c in ((1, 2, 3), (2, 3, 1), (3, 1, 2)):
        F[(a, b, c)] = Fraction(1)
        F[(b, a, c)] = Fraction(-1)
    return StructureTensor(4, (0,) * 4, F, name="quaternions", basis=("1", "i", "j", "k"))


# e_a e_b = e_c along each oriented line of the Fano plane
OCTONION_TRIPLES = ((1, 2, 3), (1, 4, 5), (2, 4, 6), (3, 4, 7), (2, 5, 7), (6, 1, 7), (3, 6, 5))


def octonions() -> StructureTensor:
    """Cayley octonions e0 = 1, e1..e7; not associative."""
    F = {}
    for a in range(8):
        F[(0, a, a)] = Fraction(1)
        F[(a, 0, a)] = Fraction(1)
    for a in range(1, 8):
        F[(a, a, 0)] = Fraction(-1)
    for t in OCTONION_TRIPLES:
        for a, b, c in (t, t[1:] + t[:1], t[2:] + t[:2]):
            F[(a, b, c)] = Fraction(1)
            F[(b, a, c)] = Fraction(-1)
    return StructureTensor(8, (0,) * 8, F, name="octonions", basis=tuple(f"e{i}" for i in range(8)))


def grassmann2() -> StructureTensor:
    """Exterior algebra on two odd generators: basis 1, t1, t2, t1t2."""
    F = {}
    for a in range(4):
        F[(0, a, a)] = Fraction(1)
        F[(a, 0, a)] = Fraction(1)
    F[(1, 2, 3)] = Fraction(1)
    F[(2, 1, 3)] = Fraction(-1)
    return StructureTensor(4, (0, 1, 1, 0), F, name="Grassmann(t1,t2)", basis=("1", "t1", "t2", "t1t2"))


def gl11() -> StructureTensor:
    """gl(1|1) supermatrix units E11, E12, E21, E22; off-diagonal units are odd."""
    units = [(0, 0), (0, 1), (1, 0), (1, 1)]
    F = {}
    for x, (a, b) in enumerate(units):
        for y, (c, d) in enumerate(units):
            if b == c:
                F[(x, y, units.index((a, d)))] = Fraction(1)
    return StructureTensor(4, (0, 1, 1, 0), F, name="gl(1|1)", basis=("E11", "E12", "E21", "E22"))


def zero(dim: int = 2) -> StructureTensor:
    return StructureTensor(dim, (0,) * dim, {}, name="zero")


def levi_civita(i: int, j: int, k: int) -> int:
    if len({i, j, k}) < 3:
        return 0
    inversions = sum(1 for a, b in itertools.combinations((i, j, k), 2) if a > b)
    return -1 if inversions % 2 else 1


def su2_tables() -> BracketTables:
    """f_ij^k = eps_ijk (the su(2) Lie bracket), c = 0."""
    f = {}
    for i, j, k in itertools.product(range(3), repeat=3):
        v = levi_civita(i, j, k)
        if v:
            f[(i, j, k)] = Fraction(v)
    return BracketTables(3, (0, 0, 0), f, {}, name="su(2) bracket, c=0", basis=("T1", "T2", "T3"))


ALGEBRAS: Dict[str, Callable[[], StructureTensor]] = {
    "gl2": gl2,
    "quaternions": quaternions,
    "octonions": octonions,
    "grassmann2": grassmann2,
    "gl11": gl11,
    "zero": zero,
}

ASSOCIATIVE = ("gl2", "quaternions", "grassmann2", "gl11")


def all_fixtures() -> Dict[str, Union[StructureTensor, BracketTables]]:
    from superjacobi.structconst import decompose

    out: Dict[str, Union[StructureTensor, BracketTables]] = {k: f() for k, f in ALGEBRAS.items()}
    out["su2_brackets"] = su2_tables()
    out["quaternion_brackets"] = decompose(quaternions())
    out["gl11_brackets"] = decompose(gl11())
    return out


def poisson_fixtures() -> Dict[str, PoissonStructure]:
    out = {f"poisson_canonical_{p}_{q}": canonical(p, q) for p in (1, 2) for q in (0, 1)}
    out["poisson_counterexample"] = counterexample()
    return out


def write_fixtures(directory: Union[str, Path]) -> List[Path]:
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    written = []
    for name, alg in all_fixtures().items():
        path = directory / f"{name}.json"
        path.write_text(dump_algebra(alg) + "\n")
        written.append(path)
    for name, S in poisson_fixtures().items():
        path = directory / f"{name}.json"
        path.write_text(compact_json(S.to_dict()) + "\n")
        written.append(path)
    return written


if __name__ == "__main__":
    for p in write_fixtures(sys.argv[1] if len(sys.argv) > 1 else "fixtures"):
        print(p)
