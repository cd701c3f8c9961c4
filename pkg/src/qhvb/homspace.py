"""Quantum homogeneous space algebras inside the coefficient algebra.

A subset Theta of the simple roots selects a reductive subalgebra U_l
of U_q(sl2) -- for rank one either the Cartan subalgebra (Theta empty)
or all of U_q(sl2) (Theta = {1}) -- and the invariant functionals

    x o f = eps(x) f   for all x in U_l

form a subalgebra E_q of the coefficient algebra.  For the Cartan
choice E_q is the Podles sphere: the level-n block contributes its
zero-right-weight column, so levels contribute n + 1 invariants when n
is even and none when n is odd.  The parabolic subalgebra U_p (the
Levi part together with every raising generator) is also housed here;
it cuts out the holomorphic sections used by the bundle machinery.
"""

from .scalars import Matrix, Echelon, ZERO, NoSolution
from . import uea, repmod, coeff


class ThetaChoice:
    """A subset of the rank-one simple root set {1}."""

    def __init__(self, theta=()):
        theta = tuple(sorted(set(theta)))
        assert theta in ((), (1,))
        self.theta = theta

    def levi_generators(self):
        """Hopf generators of U_l: the Cartan part, plus e and f when the
        simple root is selected."""
        gens = [uea.K, uea.K_INV]
        if self.theta:
            gens += [uea.E, uea.F]
        return gens

    def parabolic_generators(self):
        """Hopf generators of U_p: U_l together with the raising generator."""
        gens = [uea.K, uea.K_INV, uea.E]
        if self.theta:
            gens.append(uea.F)
        return gens

    def __repr__(self):
        return "ThetaChoice(%r)" % (self.theta,)


def _joint_right_kernel(generators, n):
    """Column vectors v with pi_n(x) v = eps(x) v for every generator x.

    Under circle the right coproduct leg is hit, and on the level-n block
    circle(x, sum_j C_ij t_ij) = sum_ik (C pi_n(x)^T)_ik t_ik, so the
    invariance condition is exactly that every row of C lies in this
    joint kernel."""
    m = repmod.irrep(n)
    rows = []
    for x in generators:
        mat = m.act(x)
        eps = uea.counit(x)
        for r in range(n + 1):
            row = [mat[r, c] - (eps if r == c else ZERO) for c in range(n + 1)]
            rows.append(row)
    stack = Matrix.zeros(len(rows), n + 1)
    for r, row in enumerate(rows):
        stack.a[r] = row
    return stack.kernel()


class InvariantBasis:
    """A basis of E_q up to Peter-Weyl level N for a given ThetaChoice.

    elements[i] are CoeffElements; block_dims[n] counts the members
    supported on level n.  Invariance of every member and linear
    independence are verified at construction."""

    def __init__(self, algebra, theta, N):
        self.algebra = algebra
        self.theta = theta
        self.N = N
        self.elements = []
        self.block_dims = []
        for n in range(N + 1):
            kernel = _joint_right_kernel(theta.levi_generators(), n)
            count = 0
            for vec in kernel:
                for i in range(n + 1):
                    terms = {}
                    for j in range(n + 1):
                        if vec[j]:
                            terms[(n, i, j)] = vec[j]
                    self.elements.append(coeff.CoeffElement(terms))
                    count += 1
            self.block_dims.append(count)
        self.echelon = Echelon()
        for f in self.elements:
            assert is_invariant(algebra, theta, f)
            residual = self.echelon.add(dict(f.terms))
            assert residual  # independence
        assert self.echelon.rank == len(self.elements)

    def contains(self, f):
        """Membership of a CoeffElement in the invariant span."""
        return not self.echelon.reduce(dict(f.terms))

    def coordinates(self, f):
        """Coordinates of f in the basis, or None when f is outside the
        span.  Solved exactly against the basis vectors."""
        keys = sorted(set(k for g in self.elements for k in g.terms) | set(f.terms))
        idx = {k: r for r, k in enumerate(keys)}
        m = Matrix.zeros(len(keys), len(self.elements))
        for c, g in enumerate(self.elements):
            for k, s in g.terms.items():
                m.a[idx[k]][c] = s
        rhs = [ZERO] * len(keys)
        for k, s in f.terms.items():
            rhs[idx[k]] = s
        try:
            return m.solve(rhs)
        except NoSolution:
            return None


def invariants(algebra, theta, N):
    """The basis of E_q up to level N, computed blockwise.

    Invariance is imposed on the Hopf generators of U_l only; it then
    holds for all of U_l because circle is an algebra action."""
    assert N <= algebra.n_max
    return InvariantBasis(algebra, theta, N)


def is_invariant(algebra, theta, f):
    """Does f satisfy x o f = eps(x) f for the generators of U_l?"""
    for x in theta.levi_generators():
        if algebra.circle(x, f) != f.scale(uea.counit(x)):
            return False
    return True


def podles_generators():
    """The three level-2 invariants t^{(2)}_{i,1} generating the Podles
    sphere, in row order i = 0, 1, 2."""
    return [coeff.basis_element(2, i, 1) for i in range(3)]


def comodule_check(algebra, theta, N):
    """Verify Delta(f) lies in T_q (x) span(E_q) for every basis element
    f of E_q up to level N, by re-expanding the right coproduct legs in
    the invariant basis.  Returns a report dict with any violations
    (each carrying the offending element and left-leg witness)."""
    basis = invariants(algebra, theta, N)
    violations = []
    for f in basis.elements:
        # group Delta(f) by left leg and test each accumulated right leg
        right = {}
        for f1, f2 in algebra.coproduct(f):
            assert len(f1.terms) == 1
            ((key, s),) = f1.terms.items()
            acc = right.setdefault(key, coeff.CoeffElement())
            right[key] = acc + f2.scale(s)
        for key, leg in right.items():
            if not basis.contains(leg):
                violations.append({"element": str(f), "left_leg": list(key)})
    return {
        "theta": list(theta.theta),
        "level_bound": N,
        "block_dims": basis.block_dims,
        "checked": len(basis.elements),
        "violations": violations,
        "passed": not violations,
    }
