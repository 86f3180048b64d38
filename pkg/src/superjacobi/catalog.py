"""The three-element identity catalog, ordinary and graded.

Ordinary identities (all generators even):

    FunI      [X,YZ] + [Z,XY] + [Y,ZX]
    FunII     [X,YZ] + {Y,ZX} - {Z,XY}
    JI        [X,[Y,Z]] + [Z,[X,Y]] + [Y,[Z,X]]
    JIab      [X,{Y,Z}] + [Z,{X,Y}] + [Y,{Z,X}]
    JIantiI   [X,{Y,Z}] - {Z,[X,Y]} + {Y,[Z,X]}
    JIantiII  [X,[Y,Z]] + {Y,{Z,X}} - {Z,{X,Y}}

The graded versions carry Koszul phases and are checked for all eight
parity assignments of (X, Y, Z).
"""

from __future__ import annotations

from typing import Dict, List, Tuple

from superjacobi.expr import Identity, anti, comm, cyclic_sum, gens, phase
from superjacobi.formal import formal, formal_difference, labelled
from superjacobi.free import FreeAlgebra, check_identity_all, expand, parity_assignments
from superjacobi.reports import DerivationReport, VerificationResult, render_residual

X, Y, Z = gens(3)


def _ordinary() -> Dict[str, Identity]:
    exprs = {
        "FunI": comm(X, Y * Z) + comm(Z, X * Y) + comm(Y, Z * X),
        "FunII": comm(X, Y * Z) + anti(Y, Z * X) - anti(Z, X * Y),
        "JI": comm(X, comm(Y, Z)) + comm(Z, comm(X, Y)) + comm(Y, comm(Z, X)),
        "JIab": comm(X, anti(Y, Z)) + comm(Z, anti(X, Y)) + comm(Y, anti(Z, X)),
        "JIantiI": comm(X, anti(Y, Z)) - anti(Z, comm(X, Y)) + anti(Y, comm(Z, X)),
        "JIantiII": comm(X, comm(Y, Z)) + anti(Y, anti(Z, X)) - anti(Z, anti(X, Y)),
    }
    return {name: Identity(name, 3, e) for name, e in exprs.items()}


def _graded() -> Dict[str, Identity]:
    xz, zy, yx = (X, Z), (Z, Y), (Y, X)
    exprs = {
        "FunIs": phase(comm(X, Y * Z), xz) + phase(comm(Z, X * Y), zy) + phase(comm(Y, Z * X), yx),
        "FunIIs": phase(comm(X, Y * Z), xz) + phase(anti(Y, Z * X), yx) - phase(anti(Z, X * Y), zy),
        "JIs": phase(comm(X, comm(Y, Z)), xz)
        + phase(comm(Z, comm(X, Y)), zy)
        + phase(comm(Y, comm(Z, X)), yx),
        "JIsI": phase(comm(X, anti(Y, Z)), xz)
        + phase(comm(Z, anti(X, Y)), zy)
        + phase(comm(Y, anti(Z, X)), yx),
        "JIantis": phase(comm(X, anti(Y, Z)), xz)
        - phase(anti(Z, comm(X, Y)), zy)
        + phase(anti(Y, comm(Z, X)), yx),
        "JIantiIs": phase(comm(X, comm(Y, Z)), xz)
        + phase(anti(Y, anti(Z, X)), (X, Y))
        - phase(anti(Z, anti(X, Y)), zy),
    }
    return {name: Identity(name, 3, e, graded=True) for name, e in exprs.items()}


ORDINARY: Dict[str, Identity] = _ordinary()
GRADED: Dict[str, Identity] = _graded()
CATALOG: Dict[str, Identity] = {**ORDINARY, **GRADED}

# (summed identity, result) pairs: summing the first over cyclic
# permutations of (X, Y, Z) gives the second
CYCLIC_DERIVATIONS: List[Tuple[str, str]] = [
    ("FunII", "FunI"),
    ("JIantiI", "JIab"),
    ("JIantiII", "JI"),
    ("FunIIs", "FunIs"),
    ("JIantis", "JIsI"),
    ("JIantiIs", "JIs"),
]


def check_catalog() -> List[VerificationResult]:
    """Every catalog identity over its parity assignments (6 + 6*8 checks)."""
    out: List[VerificationResult] = []
    for ident in CATALOG.values():
        out.extend(check_identity_all(ident))
    return out


def derive_chain_report() -> DerivationReport:
    """Check that cyclic sums of FunII, JIantiI, JIantiII (and their graded
    versions) equal FunI, JIab, JI term by term.

    Equality is tested on formal bracket terms, which is the meaningful
    comparison, and also after expansion in the free algebra.
    """
    report = DerivationReport("cyclic-sum derivations")
    for src, dst in CYCLIC_DERIVATIONS:
        a, b = CATALOG[src], CATALOG[dst]
        summed = cyclic_sum(a.expr, 3)
        assignments = list(parity_assignments(3)) if a.graded else [(0, 0, 0)]
        failures = []
        for par in assignments:
            diff = formal_difference(formal(summed, par), formal(b.expr, par))
            alg = FreeAlgebra(par)
            if diff:
                failures.append(f"parities {par}: formal residual {render_residual(labelled(diff, 3))}")
            elif expand(summed, alg) != expand(b.expr, alg):
                failures.append(f"parities {par}: expansions differ")
        detail = f"{len(assignments)} parity assignment(s)"
        if failures:
            detail += "; " + "; ".join(failures)
        report.add(f"cyclic-sum({src}) = {dst}", not failures, detail)
    return report
