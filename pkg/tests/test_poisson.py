import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from superjacobi.poisson import (
    ContextMismatch, PoissonStructure, StructureError, SuperPolynomial, canonical, check_pb_properties,
    counterexample, jacobiator, monomial_triples, parse_poly, poisson_bracket, random_polynomial, random_structure,
    random_triples, structure_from_dict,
)


def P(text, n_even=2, n_odd=2):
    return parse_poly(text, n_even, n_odd)


def test_parse_and_render():
    assert str(P("z1 - 2*z2^3")) == "z1 - 2*z2^3"
    assert P("theta2*theta1") == -P("theta1*theta2")
    assert P("t1*t1").is_zero()
    assert str(P("3/2 + z1*theta1")) == "3/2 + z1*theta1"
    with pytest.raises(ValueError):
        P("z3")
    with pytest.raises(ValueError):
        P("x1")


def test_supercommutativity():
    a, b = P("theta1"), P("theta2")
    assert a * b == -(b * a)
    assert P("z1") * a == a * P("z1")


def test_odd_derivatives():
    m = P("theta1*theta2")
    assert m.d_left(0) == P("theta2")
    assert m.d_left(1) == -P("theta1")
    assert m.d_right(1) == P("theta1")
    assert m.d_right(0) == -P("theta2")
    assert m.d_left(0).d_left(0).is_zero()


polys = st.integers(0, 10 ** 6).map(lambda s: random_polynomial(random.Random(s), 2, 2, 3))


@given(polys, polys, st.integers(0, 1))
def test_graded_leibniz_for_derivatives(F, G, a):
    f = F.parity
    g = G.parity
    assert (F * G).d_left(a) == F.d_left(a) * G + (F * G.d_left(a)).scale(-1 if f else 1)
    assert (F * G).d_right(a) == F * G.d_right(a) + (F.d_right(a) * G).scale(-1 if g else 1)
    assert (F * G).d_even(0) == F.d_even(0) * G + F * G.d_even(0)


def test_canonical_examples():
    S = canonical(1)
    q, p = S.coordinates()
    assert poisson_bracket(S, q, p) == SuperPolynomial.constant(2, 0, 1)
    assert poisson_bracket(S, q * q, p) == q.scale(2)
    T = canonical(0, 1)
    (th,) = T.coordinates()
    assert poisson_bracket(T, th, th) == SuperPolynomial.constant(0, 1, 1)
    assert jacobiator(S, q, p, q * p).is_zero()


def test_counterexample_jacobiator():
    S = counterexample()
    z1, z2, z3 = S.coordinates()
    assert jacobiator(S, z1, z2, z3) == SuperPolynomial.constant(3, 0, -1)
    report = check_pb_properties(S, monomial_triples(S))
    verdicts = {k: r.holds for k, r in report.results.items()}
    assert verdicts == {"PBant": True, "linearity": True, "PBL": True, "PBJI": False, "PBnI": True}
    assert report.results["PBJI"].witness == ("z1", "z2", "z3")


def test_constant_and_repeated_arguments():
    S = counterexample()
    one = SuperPolynomial.constant(3, 0)
    z1, z2, z3 = S.coordinates()
    assert jacobiator(S, one, z1 * z2, z3).is_zero()
    F = z1 * z2 + z3
    assert jacobiator(S, F, F, F).is_zero()


def test_bracket_parity():
    S = canonical(1, 2)
    rng = random.Random(4)
    for _ in range(30):
        F, G = (random_polynomial(rng, 2, 2, 3) for _ in range(2))
        B = poisson_bracket(S, F, G)
        assert B.is_zero() or B.parity == (F.parity + G.parity) % 2


def test_context_and_structure_errors():
    S = canonical(1)
    with pytest.raises(ContextMismatch):
        poisson_bracket(S, P("z1"), P("z1"))
    with pytest.raises(StructureError):
        structure_from_dict({"even": 2, "odd": 0, "pi_even": [[0, 1, "1"], [1, 0, "1"]]})
    with pytest.raises(StructureError):
        structure_from_dict({"even": 2, "odd": 1, "pi_even": [[0, 1, "theta1"]]})
    with pytest.raises(StructureError):
        structure_from_dict({"even": 1, "odd": 0, "pi_even": [[0, 0, "1"]]})
    with pytest.raises(StructureError):
        structure_from_dict({"even": 0, "odd": 2, "pi_odd": [[0, 1, 1], [1, 0, 2]]})
    with pytest.raises(StructureError):
        structure_from_dict({"odd": 2})


def test_structure_round_trip():
    for S in (canonical(2, 1), counterexample()):
        T = structure_from_dict(S.to_dict())
        assert T.pi_even == S.pi_even and T.pi_odd == S.pi_odd


def test_nondegeneracy_flag():
    assert canonical(2, 1).nondegenerate
    assert not counterexample().constant
    assert not PoissonStructure(2, 0, {}).nondegenerate


@pytest.mark.parametrize("p, q", [(1, 0), (1, 1), (2, 0), (2, 1)])
def test_canonical_structures_satisfy_all_properties(p, q):
    S = canonical(p, q)
    report = check_pb_properties(S, monomial_triples(S) + random_triples(S, 20, seed=p * 10 + q))
    assert report.ok, report.lines()


@given(st.integers(0, 10 ** 6))
def test_fundamental_pb_identity_holds_without_jacobi(seed):
    rng = random.Random(seed)
    S = random_structure(rng, 3, 1, degree=1)
    samples = random_triples(S, 4, seed, max_degree=2)
    report = check_pb_properties(S, samples, ("PBant", "PBL", "PBnI"))
    assert report.ok, report.lines()


@given(st.integers(0, 10 ** 6))
def test_constant_structures_satisfy_jacobi(seed):
    rng = random.Random(seed)
    S = random_structure(rng, 3, 2, degree=0)
    assert S.constant
    samples = random_triples(S, 4, seed, max_degree=3)
    assert check_pb_properties(S, samples, ("PBJI",)).ok
