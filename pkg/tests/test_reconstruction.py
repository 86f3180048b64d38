import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from superjacobi import fixtures
from superjacobi.reconstruction import (
    change_basis, fuzz_theorem2, proof_chain_check, random_associative_tensor, reconstruct_product, theorem2_check,
)
from superjacobi.structconst import (
    BracketTables, InvariantError, StructureTensor, check_associativity, decompose, random_tensor,
)
from test_structconst import tensors


def test_reconstruct_quaternions():
    Q = fixtures.quaternions()
    assert reconstruct_product(decompose(Q)) == Q


def test_reconstruct_su2_is_half_epsilon():
    F = reconstruct_product(fixtures.su2_tables()).F
    assert F[(0, 1, 2)] == Fraction(1, 2)
    assert F[(1, 0, 2)] == Fraction(-1, 2)
    assert len(F) == 6


def test_reconstruct_zero():
    B = BracketTables(2, (0, 1), {}, {})
    assert reconstruct_product(B) == StructureTensor(2, (0, 1), {})
    report = theorem2_check(B)
    assert report.hypothesis_holds and report.conclusion_holds


def test_reconstruct_rejects_bad_symmetry():
    with pytest.raises(InvariantError):
        reconstruct_product(BracketTables(2, (0, 0), {}, {(0, 1, 0): Fraction(1)}))


@pytest.mark.parametrize("name", fixtures.ASSOCIATIVE)
def test_theorem_on_associative_fixtures(name):
    report = theorem2_check(decompose(fixtures.ALGEBRAS[name]()))
    assert report.hypothesis_holds and report.conclusion_holds
    assert all(r.holds for r in report.derived.values())


def test_theorem_on_su2():
    report = theorem2_check(fixtures.su2_tables())
    assert report.hypothesis["JIantis"].holds
    anti2 = report.hypothesis["JIantiIs"]
    assert not anti2.holds
    # [T1, [T1, T2]] = [T1, T3] = -T2; the antibracket terms vanish since c = 0
    assert anti2.witness == (0, 0, 1)
    assert anti2.residual == [("T2", -1)]
    assert not report.conclusion_holds
    # (T1 o T1) o T2 - T1 o (T1 o T2) = 0 - T1 o (T3 / 2) = T2 / 4
    assert report.conclusion.residual == [("T2", Fraction(1, 4))]
    assert not report.implication_violated
    assert report.derived["JIs"].holds


def test_proof_chain():
    report = proof_chain_check()
    assert report.ok
    names = [s.name for s in report.steps]
    assert any(n.startswith("(ass3)") for n in names)
    assert any(n.startswith("(ass4)") for n in names)
    assert any(n.startswith("final") for n in names)
    assert all("8 parity assignments" in s.detail for s in report.steps[:5])


def test_change_basis_rejects_parity_mixing():
    A = fixtures.grassmann2()
    P = [[Fraction(int(i == j)) for j in range(4)] for i in range(4)]
    P[0][1] = Fraction(1)
    with pytest.raises(ValueError):
        change_basis(A, P)


@given(st.integers(0, 10 ** 6), st.integers(1, 4))
def test_random_associative_tensors_are_associative(seed, dim):
    A = random_associative_tensor(random.Random(seed), dim)
    assert A.dim == dim
    assert check_associativity(A).holds


@given(st.integers(0, 10 ** 6), st.integers(2, 4))
def test_decompose_reconstruct_inverse(seed, dim):
    A = random_associative_tensor(random.Random(seed), dim)
    B = decompose(A)
    assert reconstruct_product(B) == A
    assert decompose(reconstruct_product(B)) == B


@given(tensors())
def test_hypothesis_never_holds_without_conclusion(A):
    report = theorem2_check(decompose(A))
    assert not report.implication_violated


def test_theorem_fuzz_small():
    result = fuzz_theorem2((2, 3), 30, seed=5, random_tables=30)
    assert result.ok
    assert result.roundtrip_failures == result.implication_violations == 0
    with pytest.raises(ValueError):
        fuzz_theorem2((2,), 0, seed=5)
