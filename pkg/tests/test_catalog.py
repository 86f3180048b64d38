import pytest

from superjacobi.catalog import CATALOG, CYCLIC_DERIVATIONS, GRADED, ORDINARY, check_catalog, derive_chain_report
from superjacobi.expr import render
from superjacobi.free import check_identity, parity_assignments


def test_catalog_contents():
    assert set(ORDINARY) == {"FunI", "FunII", "JI", "JIab", "JIantiI", "JIantiII"}
    assert set(GRADED) == {"FunIs", "FunIIs", "JIs", "JIsI", "JIantis", "JIantiIs"}
    assert render(CATALOG["FunII"].expr) == "[X,YZ] + {Y,ZX} - {Z,XY}"
    assert render(CATALOG["JIantiII"].expr) == "[X,[Y,Z]] + {Y,{Z,X}} - {Z,{X,Y}}"


def test_every_catalog_identity_expands_to_zero():
    results = check_catalog()
    assert len(results) == 6 + 6 * 8
    assert all(r.holds for r in results)
    assert {r.parities for r in results if r.name == "FunIIs"} == set(parity_assignments(3))


@pytest.mark.parametrize("name", sorted(GRADED))
def test_graded_identities_need_their_phases(name):
    """Dropping the Koszul phases breaks each graded identity for some odd assignment."""
    from superjacobi.expr import Identity, Phase, Scale, Sum

    def strip(e):
        if isinstance(e, Phase):
            return strip(e.expr)
        if isinstance(e, Scale):
            return Scale(e.coeff, strip(e.expr))
        if isinstance(e, Sum):
            return Sum(tuple(strip(t) for t in e.terms))
        return e

    bare = Identity(name + "-nophase", 3, strip(CATALOG[name].expr))
    assert check_identity(bare, (0, 0, 0)).holds
    assert not all(check_identity(bare, p).holds for p in parity_assignments(3))


def test_cyclic_derivations():
    report = derive_chain_report()
    assert report.ok
    assert len(report.steps) == len(CYCLIC_DERIVATIONS) == 6
