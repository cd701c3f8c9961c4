"""Exact arithmetic in Q(u) and the linear algebra kernel."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from qhvb.scalars import (
    Scalar,
    Matrix,
    Echelon,
    qint,
    qfact,
    eval_at,
    kernel,
    rank,
    PoleError,
    NoSolution,
    ZERO,
    ONE,
)


U = Scalar.u_power(1)


# ----------------------------------------------------------------------
# canonical forms


def test_canonical_reduction():
    # (2u + 2)/4 reduces to (u + 1)/2
    assert Scalar((2, 2), (4,)) == Scalar((1, 1), (2,))
    # (u^2 - 1)/(u - 1) reduces to u + 1
    assert Scalar((-1, 0, 1), (-1, 1)) == Scalar((1, 1))
    # sign normalization: denominator leading coefficient is positive
    s = Scalar((1,), (-1, -2))
    assert s.den[-1] > 0
    assert s == Scalar((-1,), (1, 2))


def test_hash_consistency():
    a = Scalar((2, 2), (4,))
    b = Scalar((1, 1), (2,))
    assert hash(a) == hash(b)
    assert len({a, b}) == 1


# ----------------------------------------------------------------------
# q-integers


def test_qint_zero_and_one():
    assert qint(0) == ZERO
    assert qint(1) == ONE


def test_qint_two_polynomial_identity():
    # [2] = q + q^{-1} with q = u^4
    assert qint(2) == Scalar.q_power(1) + Scalar.q_power(-1)


def test_qint_negation():
    for n in range(5):
        assert qint(-n) == -qint(n)


def test_qint_classical_limit():
    for n in range(6):
        assert eval_at(qint(n), 1) == n


def test_qint_at_one_half():
    # independent oracle: direct rational arithmetic at q0 = (1/2)^4
    q0 = Fraction(1, 2) ** 4
    expected = (q0 ** 3 - q0 ** -3) / (q0 - q0 ** -1)
    got = eval_at(qint(3), Fraction(1, 2))
    assert got == expected
    assert got == Fraction(65793, 256)


def test_qfact():
    assert qfact(0) == ONE
    assert qfact(3) == qint(2) * qint(3)


def test_pole_error():
    s = U / (U - ONE)
    with pytest.raises(PoleError):
        eval_at(s, 1)
    assert eval_at(s, 2) == 2


# ----------------------------------------------------------------------
# field axioms on randomized samples

small_ints = st.integers(min_value=-6, max_value=6)
polys = st.lists(small_ints, min_size=0, max_size=4).map(tuple)
nonzero_polys = polys.filter(lambda p: any(p))
scalars = st.builds(Scalar, polys, nonzero_polys)
nonzero_scalars = st.builds(Scalar, nonzero_polys, nonzero_polys)


@settings(max_examples=60, deadline=None)
@given(scalars, scalars, scalars)
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a + b == b + a
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert a + ZERO == a
    assert a * ONE == a
    assert a - a == ZERO


@settings(max_examples=40, deadline=None)
@given(nonzero_scalars)
def test_multiplicative_inverse(a):
    assert a * (ONE / a) == ONE


@settings(max_examples=40, deadline=None)
@given(scalars)
def test_specialization_is_a_homomorphism(a):
    # evaluation at a generic rational point commutes with arithmetic
    u0 = Fraction(3, 5)
    b = a * a + a
    try:
        lhs = eval_at(b, u0)
        rhs = eval_at(a, u0) ** 2 + eval_at(a, u0)
    except PoleError:
        return
    assert lhs == rhs


def test_powers():
    s = (U + ONE) / U
    assert s ** 0 == ONE
    assert s ** 3 == s * s * s
    assert s ** -2 == ONE / (s * s)
    assert Scalar.u_power(-3) * Scalar.u_power(3) == ONE


# ----------------------------------------------------------------------
# matrices


def test_kernel_identity_empty():
    assert kernel(Matrix.identity(3)) == []


def test_rank_zero_matrix():
    assert rank(Matrix.zeros(2, 2)) == 0


def test_kernel_derived_example():
    # kernel of [[1, u], [u, u^2]] is spanned by (-u, 1); the oracle is
    # direct verification m.v = 0 plus the rank-nullity count
    m = Matrix([[ONE, U], [U, U * U]])
    basis = kernel(m)
    assert len(basis) == 1
    v = basis[0]
    assert m.apply(v) == [ZERO, ZERO]
    # proportional to (-u, 1)
    assert v[0] * ONE == -U * v[1]
    assert rank(m) + len(basis) == m.cols


def _random_scalar(rng, deg=2):
    num = tuple(rng.randint(-4, 4) for _ in range(rng.randint(1, deg + 1)))
    return Scalar(num if any(num) else (1,))


def test_rank_nullity_and_kernel_verified():
    rng = random.Random(7)
    for _ in range(10):
        r, c = rng.randint(1, 4), rng.randint(1, 5)
        m = Matrix([[_random_scalar(rng) for _ in range(c)] for _ in range(r)])
        basis = m.kernel()
        assert m.rank() + len(basis) == c
        for v in basis:
            assert all(not x for x in m.apply(v))


def test_solve_and_no_solution():
    m = Matrix([[ONE, U], [U, U * U]])
    # rhs in the column span: m applied to (1, 1)
    rhs = [ONE + U, U + U * U]
    x = m.solve(rhs)
    assert m.apply(x) == rhs
    with pytest.raises(NoSolution):
        m.solve([ONE, ZERO])


def test_inverse():
    m = Matrix([[ONE, U], [ZERO, ONE + U]])
    assert m * m.inverse() == Matrix.identity(2)
    with pytest.raises(NoSolution):
        Matrix([[ONE, ONE], [ONE, ONE]]).inverse()


def test_product_associativity_exact():
    rng = random.Random(3)
    a = Matrix([[_random_scalar(rng) for _ in range(3)] for _ in range(2)])
    b = Matrix([[_random_scalar(rng) for _ in range(2)] for _ in range(3)])
    c = Matrix([[_random_scalar(rng) for _ in range(2)] for _ in range(2)])
    assert (a * b) * c == a * (b * c)


def test_tensor_mixed_product():
    rng = random.Random(5)
    a = Matrix([[_random_scalar(rng) for _ in range(2)] for _ in range(2)])
    b = Matrix([[_random_scalar(rng) for _ in range(2)] for _ in range(2)])
    c = Matrix([[_random_scalar(rng) for _ in range(2)] for _ in range(2)])
    d = Matrix([[_random_scalar(rng) for _ in range(2)] for _ in range(2)])
    assert a.tensor(b) * c.tensor(d) == (a * c).tensor(b * d)


# ----------------------------------------------------------------------
# sparse echelon spans


def test_echelon_matches_dense_rank():
    rng = random.Random(11)
    for _ in range(6):
        r, c = rng.randint(1, 5), rng.randint(1, 5)
        m = Matrix([[_random_scalar(rng) for _ in range(c)] for _ in range(r)])
        ech = Echelon()
        for row in m.a:
            ech.add({j: x for j, x in enumerate(row) if x})
        assert ech.rank == m.rank()


def test_echelon_membership_and_canonical_reduction():
    ech = Echelon()
    ech.add({0: ONE, 1: U})
    ech.add({1: ONE})
    assert ech.contains({0: U + ONE, 1: U * U})
    assert not ech.contains({2: ONE})
    # reduction is idempotent
    red = ech.reduce({0: ONE, 2: U})
    assert ech.reduce(red) == red
