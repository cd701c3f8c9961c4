"""Tests for the quantum homogeneous space algebras.

The dimension oracle is classical weight theory: Cartan invariance of
the right index picks the zero-weight columns of irrep(n), so even
levels contribute n + 1 invariants and odd levels none.  Closure under
multiplication is checked by re-expanding products in the invariant
span, and the comodule property by re-expanding right coproduct legs."""

import random

from qhvb.scalars import Scalar, ZERO
from qhvb import uea, repmod, coeff, homspace

U = Scalar.u_power


def test_theta_choice():
    cartan = homspace.ThetaChoice()
    assert cartan.theta == ()
    gens = cartan.levi_generators()
    assert uea.K in gens and uea.K_INV in gens and uea.E not in gens
    par = cartan.parabolic_generators()
    assert uea.E in par and uea.F not in par
    full = homspace.ThetaChoice((1,))
    assert uea.E in full.levi_generators()
    assert uea.F in full.parabolic_generators()


def test_block_dimensions_match_weight_oracle():
    a = coeff.Algebra(6)
    theta = homspace.ThetaChoice()
    basis = homspace.invariants(a, theta, 5)
    # oracle: count zero-weight columns of irrep(n), times n + 1 rows
    for n in range(6):
        weights = repmod.irrep(n).weights
        zero_cols = sum(1 for w in weights if w == 0)
        assert basis.block_dims[n] == (n + 1) * zero_cols
    assert basis.block_dims == [1, 0, 3, 0, 5, 0]


def test_trivial_homogeneous_space():
    # Theta = {1} makes U_l everything, so only the unit survives
    a = coeff.Algebra(4)
    basis = homspace.invariants(a, homspace.ThetaChoice((1,)), 3)
    assert basis.block_dims == [1, 0, 0, 0]
    assert basis.elements == [coeff.unit()]


def test_is_invariant():
    a = coeff.Algebra(4)
    theta = homspace.ThetaChoice()
    assert homspace.is_invariant(a, theta, coeff.unit())
    assert not homspace.is_invariant(a, theta, coeff.basis_element(1, 0, 0))
    for g in homspace.podles_generators():
        assert homspace.is_invariant(a, theta, g)
    # invariance survives products
    prod = a.multiply(homspace.podles_generators()[0], homspace.podles_generators()[2])
    assert homspace.is_invariant(a, theta, prod)


def test_podles_generators_are_the_level_two_block():
    a = coeff.Algebra(4)
    basis = homspace.invariants(a, homspace.ThetaChoice(), 2)
    for g in homspace.podles_generators():
        assert basis.contains(g)
        coords = basis.coordinates(g)
        assert coords is not None
        assert sum(1 for c in coords if c) == 1
    assert not basis.contains(coeff.basis_element(2, 0, 0))
    assert basis.coordinates(coeff.basis_element(2, 0, 0)) is None


def test_multiplicative_closure():
    a = coeff.Algebra(6)
    theta = homspace.ThetaChoice()
    basis = homspace.invariants(a, theta, 4)
    rng = random.Random(501)
    small = [f for f in basis.elements if f.level <= 2]
    for _ in range(12):
        f = rng.choice(small)
        g = rng.choice(small)
        prod = a.multiply(f, g)
        assert prod.level <= 4
        assert basis.contains(prod)
    # a random invariant-span combination stays closed too
    f = small[1] + small[2].scale(U(3)) + coeff.unit()
    g = small[3] - small[0].scale(U(-1))
    assert basis.contains(a.multiply(f, g))


def test_podles_sphere_relations_shape():
    # the three generators satisfy a quadratic relation landing in
    # levels {0, 2, 4}: products of level-2 invariants re-expand with
    # no odd-level support
    a = coeff.Algebra(6)
    b0, b1, b2 = homspace.podles_generators()
    for f in (b0, b1, b2):
        for g in (b0, b1, b2):
            prod = a.multiply(f, g)
            assert set(n for (n, i, j) in prod.terms) <= {0, 2, 4}


def test_comodule_check_passes():
    a = coeff.Algebra(6)
    theta = homspace.ThetaChoice()
    for N in (0, 2, 4):
        report = homspace.comodule_check(a, theta, N)
        assert report["passed"]
        assert report["violations"] == []
        assert report["checked"] == sum(report["block_dims"])
    report = homspace.comodule_check(a, homspace.ThetaChoice((1,)), 2)
    assert report["passed"]


def test_comodule_membership_is_sharp():
    # the right legs of a *non*-invariant element escape the span,
    # confirming the membership test has teeth
    a = coeff.Algebra(4)
    basis = homspace.invariants(a, homspace.ThetaChoice(), 2)
    outside = coeff.basis_element(2, 0, 0)
    right = {}
    for f1, f2 in a.coproduct(outside):
        ((key, s),) = f1.terms.items()
        right[key] = right.get(key, coeff.CoeffElement()) + f2.scale(s)
    assert any(not basis.contains(leg) for leg in right.values())
