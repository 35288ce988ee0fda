from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qhborel import linalg as la
from qhborel.linalg import Field

Q = Field()
F7 = Field(7)


def mat(F, rows):
    return F.matrix(rows)


def test_rref_identity():
    red, piv, rk = la.rref(Q.identity(3))
    assert la.equal(red, Q.identity(3)) and piv == [0, 1, 2] and rk == 3


def test_rref_zero():
    red, piv, rk = la.rref(Q.zeros(2, 4))
    assert la.is_zero(red) and piv == [] and rk == 0


def test_rref_hand_reduced():
    red, piv, rk = la.rref(mat(Q, [[2, 4], [1, 2]]))
    assert la.equal(red, mat(Q, [[1, 2], [0, 0]])) and rk == 1 and piv == [0]


def test_kernel_examples():
    assert la.kernel_basis(Q.identity(3)) == []
    assert len(la.kernel_basis(Q.zeros(2, 3))) == 3
    m = mat(Q, [[1, 1, 0]])
    ks = la.kernel_basis(m)
    assert len(ks) == 2
    for v in ks:
        assert la.is_zero(m * Q.column(v))


def test_solve_examples():
    b = Q.column([1, 2, 3])
    assert la.equal(la.solve(Q.identity(3), b), b)
    assert la.solve(Q.zeros(2, 2), Q.column([1, 0])) is None
    m = mat(Q, [[1, 2], [2, 4]])
    x = la.solve(m, Q.column([1, 2]))
    assert la.equal(m * x, Q.column([1, 2]))
    with pytest.raises(ValueError):
        la.solve(m, Q.column([1, 2, 3]))


def test_subspace_ops():
    e1, e2 = Q.column([1, 0]), Q.column([0, 1])
    assert la.span_intersection(e1, e2).ncols() == 0
    both = la.hstack([e1, e2])
    assert la.quotient_complement(both, e1).ncols() == 1
    assert la.rank(mat(Q, [[1, 1], [1, -1]])) == 2
    assert la.span_contains(both, Q.column([3, 5]))
    assert not la.span_contains(e1, e2)


def test_prime_field_canonical():
    x = F7(10)
    assert int(x) == 3
    assert F7.to_int_pair(F7(-1)) == (6, 1)
    with pytest.raises(ZeroDivisionError):
        F7.one / F7.zero
    with pytest.raises(ZeroDivisionError):
        Q.one / Q.zero


def test_field_parse():
    assert Field.parse("rational") == Q
    assert Field.parse("fp:103").p == 103
    with pytest.raises(ValueError):
        Field.parse("fp:100")
    assert Q("3/4") == Q(Fraction(3, 4))


small = st.integers(-4, 4)


@st.composite
def matrices(draw, F=Q):
    r = draw(st.integers(1, 5))
    c = draw(st.integers(1, 5))
    return F.matrix([[draw(small) for _ in range(c)] for _ in range(r)], c)


@given(matrices())
def test_rref_idempotent(m):
    red = la.rref(m)[0]
    assert la.equal(la.rref(red)[0], red)


@given(matrices())
def test_rank_nullity(m):
    assert la.kernel(m).ncols() + la.rank(m) == m.ncols()
    assert la.rank(m) <= min(m.nrows(), m.ncols())


@given(matrices(F7))
def test_rank_nullity_fp(m):
    K = la.kernel(m)
    assert K.ncols() + la.rank(m) == m.ncols()
    assert la.is_zero(m * K) if K.ncols() else True


@given(matrices(), st.lists(small, min_size=5, max_size=5))
def test_solve_witness(m, bv):
    b = Q.column(bv[: m.nrows()])
    x = la.solve(m, b)
    if x is not None:
        assert la.equal(m * x, b)
    else:
        assert not la.span_contains(m, b)
