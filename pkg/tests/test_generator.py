import pytest

from superjacobi.catalog import CATALOG
from superjacobi.free import expand, FreeAlgebra
from superjacobi.generator import (
    chain_check, family_report, gen_fundamental_n, gen_helper_n, gen_jacobi3, gen_mixed_n, genji4_label_cycle,
    jacobi3_check, names, raw_term_count, render, verify, wever_check,
)


def test_fundamental_n3_is_funi():
    assert verify(gen_fundamental_n(3)).holds
    assert expand(gen_fundamental_n(3).expr, FreeAlgebra((0, 0, 0))) == expand(
        CATALOG["FunI"].expr, FreeAlgebra((0, 0, 0))
    )
    assert render(gen_fundamental_n(3).expr, names(3)) == "[X1,X2X3] + [X2,X3X1] + [X3,X1X2]"


def test_mixed_n4_text():
    assert render(gen_mixed_n(4).expr, names(4)) == "[X1,X2X3X4] - {X4,X1X2X3} + {X3,X4X1X2} + [X2,X3X4X1]"


def test_helper_n2_text():
    assert render(gen_helper_n(2).expr, names(2)) == "[X2,X1] + [X1,X2] + {X2,X1} - {X1,X2}"


@pytest.mark.parametrize("n", range(3, 8))
def test_fundamental_family(n):
    ident = gen_fundamental_n(n)
    assert verify(ident).holds
    assert raw_term_count(ident) == 2 * n


@pytest.mark.parametrize("n", range(4, 8))
def test_mixed_family(n):
    assert verify(gen_mixed_n(n)).holds
    assert len(gen_mixed_n(n).expr.terms) == n


@pytest.mark.parametrize("n", range(2, 8))
def test_helper_family(n):
    assert verify(gen_helper_n(n)).holds


@pytest.mark.parametrize("fn, bad", [(gen_fundamental_n, 2), (gen_mixed_n, 3), (gen_helper_n, 1), (gen_mixed_n, 10)])
def test_family_bounds(fn, bad):
    with pytest.raises(ValueError):
        fn(bad)


def test_wever():
    report = wever_check()
    assert report.ok
    assert "GenJI4 = -1 * GenJI4our1" in report.steps[2].detail


def test_label_cycle_reading_is_not_an_identity():
    assert not expand(genji4_label_cycle(), FreeAlgebra((0,) * 4)).is_zero()


def test_jacobi3():
    assert verify(gen_jacobi3()).holds
    assert jacobi3_check().ok


def test_chain():
    report = chain_check((4, 5, 6))
    assert report.ok and len(report.steps) == 9


def test_family_report():
    info = family_report("fundamental", 6)
    assert info["result"].holds and info["raw_terms"] == 12
