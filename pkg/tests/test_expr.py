import pytest
from hypothesis import given
from hypothesis import strategies as st

from superjacobi.expr import (
    Identity, anti, comm, cyclic_sum, depth, from_json, gens, leaves, phase, relabel, render, to_json, word,
)

X, Y, Z = gens(3)


def test_render_matches_notation():
    e = comm(X, Y * Z) + anti(Y, Z * X) - anti(Z, X * Y)
    assert render(e) == "[X,YZ] + {Y,ZX} - {Z,XY}"
    assert render(comm(X, comm(Y, Z))) == "[X,[Y,Z]]"
    assert render(2 * comm(X, Y)) == "2*[X,Y]"


def test_products_and_sums_flatten():
    e = X * Y * Z
    assert len(e.factors) == 3
    s = comm(X, Y) + comm(Y, Z) + comm(Z, X)
    assert len(s.terms) == 3


def test_identity_checks_arity():
    with pytest.raises(ValueError):
        Identity("bad", 2, comm(X, Z))


def test_relabel_and_cyclic_sum():
    e = comm(X, Y * Z)
    assert render(relabel(e, {0: 1, 1: 2, 2: 0})) == "[Y,ZX]"
    assert render(cyclic_sum(e, 3)) == "[X,YZ] + [Y,ZX] + [Z,XY]"


def test_relabel_moves_phases():
    e = phase(comm(X, Y), (X, Z))
    assert relabel(e, {0: 1, 1: 2, 2: 0}).pairs == ((1, 0),)


def test_depth_and_leaves():
    e = comm(X, comm(Y, Z))
    assert depth(e) == 3
    assert sorted(leaves(e)) == [0, 1, 2]


leaf = st.integers(0, 3).map(lambda i: word(i))
trees = st.recursive(
    leaf,
    lambda kids: st.one_of(
        st.tuples(kids, kids).map(lambda t: t[0] * t[1]),
        st.tuples(kids, kids).map(lambda t: comm(*t)),
        st.tuples(kids, kids).map(lambda t: anti(*t)),
        st.tuples(kids, kids).map(lambda t: t[0] - t[1]),
        st.tuples(st.fractions(max_denominator=5), kids).map(lambda t: t[0] * t[1]),
        kids.map(lambda k: phase(k, (gens(4)[0], gens(4)[2]))),
    ),
    max_leaves=8,
)


@given(trees)
def test_json_round_trip(e):
    assert from_json(to_json(e)) == e
