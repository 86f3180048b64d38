from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from superjacobi.expr import Identity, anti, comm, gens, phase
from superjacobi.free import (
    ContextMismatch, FreeAlgebra, UnboundGenerator, anticommutator, check_identity, commutator, expand, expand_raw,
)

X, Y, Z = gens(3)


def test_graded_commutators_of_generators():
    A = FreeAlgebra([0, 1, 1])
    x, s, t = A.gens()
    assert commutator(x, s) == x * s - s * x
    # two odd generators: [s,t] = st + ts, {s,t} = st - ts
    assert commutator(s, t) == s * t + t * s
    assert anticommutator(s, t) == s * t - t * s
    assert anticommutator(s, s).is_zero()
    assert commutator(x, x).is_zero()


def test_mixed_parity_element_is_bracketed_per_part():
    A = FreeAlgebra([0, 1])
    x, s = A.gens()
    mixed = x + s
    assert mixed.parity is None
    assert commutator(mixed, s) == commutator(x, s) + commutator(s, s)


def test_context_mismatch():
    a, b = FreeAlgebra([0]), FreeAlgebra([1])
    with pytest.raises(ContextMismatch):
        a.gen(0) + b.gen(0)


def test_unbound_generator():
    with pytest.raises(UnboundGenerator):
        FreeAlgebra([0, 0]).gen(2)
    with pytest.raises(UnboundGenerator):
        check_identity(Identity("I", 3, comm(X, Z)), (0, 0))


def test_check_identity_reports_residual():
    wrong = Identity("wrong", 3, comm(X, Y * Z) + anti(Y, Z * X) + anti(Z, X * Y))
    r = check_identity(wrong)
    assert not r.holds
    assert r.residual  # 2*ZXY - 2*XYZ style terms
    assert sum(abs(c) for _, c in r.residual) == 4


def test_raw_expansion_counts_words_before_cancellation():
    e = comm(X, Y * Z) + comm(Z, X * Y) + comm(Y, Z * X)
    assert len(expand_raw(e, (0, 0, 0))) == 6
    assert expand(e, FreeAlgebra((0, 0, 0))).is_zero()


def test_phase_uses_parities():
    e = phase(comm(X, Y), (X, Y))
    A = FreeAlgebra((1, 1, 0))
    assert expand(e, A) == -commutator(A.gen(0), A.gen(1))


words = st.lists(st.integers(0, 2), min_size=0, max_size=3).map(tuple)
coeffs = st.integers(-3, 3).map(Fraction)
parity_vecs = st.tuples(*[st.integers(0, 1)] * 3)


@st.composite
def homogeneous(draw, parities):
    target = draw(st.integers(0, 1))
    terms = draw(st.dictionaries(words, coeffs, max_size=3))
    A = FreeAlgebra(parities)
    return A.element({w: c for w, c in terms.items() if A.word_parity(w) == target})


@given(st.data(), parity_vecs)
def test_superjacobi_and_leibniz_on_random_elements(data, par):
    a, b, c = (data.draw(homogeneous(par)) for _ in range(3))
    pa, pb, pc = (e.parity or 0 for e in (a, b, c))
    s = lambda p, q: -1 if p * q % 2 else 1  # noqa: E731
    # [a, bc] = [a, b]c + (-1)^(ab) b[a, c]
    assert commutator(a, b * c) == commutator(a, b) * c + s(pa, pb) * (b * commutator(a, c))
    # graded Jacobi with Koszul phases
    jac = (
        s(pa, pc) * commutator(a, commutator(b, c))
        + s(pc, pb) * commutator(c, commutator(a, b))
        + s(pb, pa) * commutator(b, commutator(c, a))
    )
    assert jac.is_zero()


@given(st.data(), parity_vecs)
def test_graded_symmetry_of_brackets(data, par):
    a, b = data.draw(homogeneous(par)), data.draw(homogeneous(par))
    pa, pb = a.parity or 0, b.parity or 0
    s = -1 if pa * pb else 1
    assert commutator(a, b) == -s * commutator(b, a)
    assert anticommutator(a, b) == s * anticommutator(b, a)
