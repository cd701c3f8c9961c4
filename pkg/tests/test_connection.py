import pytest
from qhvb import coeff, repmod, calculus, bundle, homspace, connection
from qhvb.scalars import Scalar

A = coeff.Algebra(10)
CALC = calculus.Calculus(A, calculus.from_rep(repmod.irrep(1)))
V = bundle.LModule([1])
TSS = connection.TensoredSectionSpace(CALC, V, 1)
CONN0 = connection.make_connection(TSS)
CONN_A = connection.make_connection(TSS, [[Scalar(1), 0], [0, Scalar(3)]])
PODLES = homspace.podles_generators()


def test_realization_shape():
    assert TSS.dim_w == 2
    assert len(TSS.sections) == 2
    for alpha in range(TSS.dim_w):
        assert TSS.is_invariant(TSS.generator(alpha))
    for s in TSS.sections:
        psi = TSS.from_section(s)
        assert TSS.is_invariant(psi)
        assert TSS.to_section(psi) == s
    # a raw coordinate vector is moved by the idempotent
    raw = [CALC.form0(coeff.unit()), CALC.zero(0)]
    assert not TSS.is_invariant(raw)


def test_partial_leibniz():
    for s in TSS.sections:
        for g in PODLES:
            lhs = TSS.partial(s.times(g))
            rhs = TSS.add(TSS.right_mult(TSS.partial(s), CALC.form0(g)),
                          TSS.right_mult(TSS.from_section(s), CALC.d0(g)))
            assert TSS.equal(lhs, rhs)


def test_partial_explicit_formula():
    # partial(zeta) assembled section-by-section from the generator
    # columns and the differentials of the idempotent coefficients
    for s in TSS.sections:
        el = bundle.im(A, TSS.completion, s)
        out = TSS.zero(1)
        for beta in range(TSS.dim_w):
            a_beta = el.get(beta, coeff.CoeffElement())
            if a_beta.is_zero():
                continue
            out = TSS.add(out, TSS.right_mult(TSS.generator(beta),
                                              CALC.d0(a_beta)))
        assert TSS.equal(out, TSS.partial(s))


def test_nabla0_realizations_agree():
    for s in TSS.sections:
        psi = TSS.from_section(s)
        assert TSS.equal(TSS.nabla0(psi), TSS.nabla0_chain(psi))
        assert TSS.equal(TSS.nabla0(psi), TSS.partial(s))
        one = TSS.nabla0(psi)
        assert TSS.equal(TSS.nabla0(one), TSS.nabla0_chain(one))


def test_graded_connection_law():
    for s in TSS.sections:
        psi = CONN0.on_section(s)  # degree 1
        for w in [CALC.theta(), CALC.d0(PODLES[0])]:
            lhs = CONN0.apply(TSS.right_mult(psi, w))
            rhs = TSS.add(
                TSS.right_mult(CONN0.apply(psi), w),
                [x.scale(Scalar(-1))
                 for x in TSS.right_mult(psi, CALC.d(w))])
            assert TSS.equal(lhs, rhs)


def test_connection_law_with_perturbation():
    import random
    rnd = random.Random(11)
    for _ in range(3):
        lam = [[Scalar(rnd.randint(-3, 3)) if i == j else Scalar(0)
                for j in range(TSS.dim_w)] for i in range(TSS.dim_w)]
        conn = connection.make_connection(tss=TSS, perturbation=lam)
        for s in TSS.sections:
            for g in PODLES:
                lhs = conn.on_section(s.times(g))
                rhs = TSS.add(
                    TSS.right_mult(conn.on_section(s), CALC.form0(g)),
                    TSS.right_mult(TSS.from_section(s), CALC.d0(g)))
                assert TSS.equal(lhs, rhs)


def test_sections_mode_certificate():
    # tensoring on the right by theta is not right-linear, so the
    # identity-times-theta table must be rejected
    n = len(TSS.sections)
    ident = [[Scalar(2) if i == j else Scalar(0) for j in range(n)]
             for i in range(n)]
    with pytest.raises(connection.NotLinear):
        connection.make_connection(TSS, ident, on="sections")


def test_sections_mode_round_trip():
    m = CONN_A.sections_matrix()
    conn_b = connection.make_connection(TSS, m, on="sections")
    for s in TSS.sections:
        psi = TSS.from_section(s)
        assert TSS.equal(CONN_A.apply(psi), conn_b.apply(psi))
        one = CONN0.on_section(s)
        assert TSS.equal(CONN_A.apply(one), conn_b.apply(one))


def test_difference_right_linear():
    def diff(vec):
        return TSS.add(CONN_A.apply(vec),
                       [x.scale(Scalar(-1)) for x in CONN0.apply(vec)])
    for s in TSS.sections:
        for g in PODLES:
            lhs = diff(TSS.from_section(s.times(g)))
            rhs = TSS.right_mult(diff(TSS.from_section(s)), CALC.form0(g))
            assert TSS.equal(lhs, rhs)


def test_curvature_properties():
    for conn in (CONN0, CONN_A):
        F = connection.curvature(conn)
        assert not F.is_zero()
        assert F.linearity_check()
        assert all(F.bianchi_check())


def test_curvature_omega_linearity():
    for s in TSS.sections:
        psi = TSS.from_section(s)
        for w in [CALC.theta(), CALC.d0(PODLES[1])]:
            lhs = CONN_A.apply(CONN_A.apply(TSS.right_mult(psi, w)))
            rhs = TSS.right_mult(CONN_A.apply(CONN_A.apply(psi)), w)
            assert TSS.equal(lhs, rhs)


def test_curvature_regression():
    F = connection.curvature(CONN0)
    table = {}
    for a, fv in enumerate(F.on_generators):
        for g, w in enumerate(fv):
            for key, ce in w.coords.items():
                if not ce.is_zero():
                    table[(a, g, key)] = str(ce)
    assert len(table) == 8
    assert all(key[2] in ((2, 1), (3, 2)) for key in table)
    assert table[(0, 0, (2, 1))] == (
        "((-u^24 + 2*u^16 - u^8)/(u^8 + 1))"
        " + ((-u^16 + 2*u^8 - 1)/(u^8 + 1)) t[2;1,1]")
    assert table[(0, 1, (3, 2))] == (
        "((-u^24 + 3*u^16 - 3*u^8 + 1)/(u^4)) t[2;2,0]")
    assert table[(1, 0, (2, 1))] == "(u^18 - 2*u^10 + u^2) t[2;0,1]"


def test_trivial_bundle():
    tt = connection.TensoredSectionSpace(CALC, bundle.LModule([0]), 2)
    assert tt.dim_w == 1
    for s in tt.sections:
        f = s.components[0]
        assert tt.partial(s) == [CALC.reduce_mod_J(CALC.d0(f))]
        psi = tt.from_section(s)
        assert tt.equal(tt.nabla0(psi), [CALC.d(psi[0])])
    F = connection.curvature(connection.make_connection(tt))
    assert F.is_zero()


def test_level_overflow_propagates():
    narrow = calculus.Calculus(coeff.Algebra(4),
                               calculus.from_rep(repmod.irrep(1)))
    tss = connection.TensoredSectionSpace(narrow, V, 1)
    with pytest.raises(coeff.LevelOverflow):
        tss.partial(tss.sections[0].times(PODLES[0]))
    with pytest.raises(coeff.LevelOverflow):
        connection.make_connection(tss, [[1, 0], [0, 3]])
