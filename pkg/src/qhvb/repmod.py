"""Finite-dimensional U_q(sl2) modules: irreps, tensor products,
decomposition into irreducibles, and the R-matrix.

A Module stores exact matrices for the generators and verifies the
defining relations at construction.  The irreducible V_n (n >= 0) has
basis w_0, ..., w_n with

    k w_j = u^{2(n-2j)} w_j,   e w_j = [j] w_{j-1},   f w_j = [n-j] w_{j+1},

so w_0 is the highest-weight vector and all structure constants are
balanced q-integers.  Tensor products act through the coproduct.

The R-matrix on a pair of weight modules is the Cartan factor

    C (w (x) w') = u^{2 m m'} w (x) w'      (weights m, m')

times a finite unipotent series

    Theta = sum_n  c_n  (k e)^n (x) (k^{-1} f)^n,

    c_n = (q - q^{-1})^n q^{n(n-3)/2} / [n]!

The coefficients are forced by quasi-triangularity for the k-balanced
coproduct: R D(x) = D^op(x) R has a unique solution of this shape with
c_0 = 1 (the tests re-derive c_n from that linear system).
"""

from .scalars import Scalar, Matrix, ZERO, ONE, qint, NoSolution
from . import uea


class DecompositionError(Exception):
    pass


_QPOW = Scalar.q_power
_UPOW = Scalar.u_power
_QDIFF = _QPOW(1) - _QPOW(-1)


class Module:
    """A finite-dimensional left U_q(sl2) module with exact action
    matrices.  The defining relations are checked at construction."""

    def __init__(self, e, f, k, check=True):
        self.dim = e.rows
        self.e = e
        self.f = f
        self.k = k
        self.k_inv = k.inverse()
        if check:
            self._verify_relations()
        self.weights = self._diagonal_weights()
        self._pows = {}

    def _verify_relations(self):
        e, f, k, k_inv = self.e, self.f, self.k, self.k_inv
        q = _QPOW(1)
        assert k * e * k_inv == e.scale(q), "k e k^{-1} != q e"
        assert k * f * k_inv == f.scale(_QPOW(-1)), "k f k^{-1} != q^{-1} f"
        lhs = e * f - f * e
        rhs = (k * k - k_inv * k_inv).scale(ONE / _QDIFF)
        assert lhs == rhs, "e f - f e != (k^2 - k^{-2})/(q - q^{-1})"

    def _diagonal_weights(self):
        """If k is diagonal with entries u^{2m}, the integer weights m;
        otherwise None."""
        ws = []
        for i in range(self.dim):
            for j in range(self.dim):
                if i != j and self.k[i, j]:
                    return None
            d = self.k[i, i]
            # recognize u^{2m}: numerator/denominator are single powers
            num, den = d.num, d.den
            if sum(1 for t in num if t) != 1 or sum(1 for t in den if t) != 1:
                return None
            twice = (len(num) - 1) - (len(den) - 1)
            if twice % 2 or d != _UPOW(twice):
                return None
            ws.append(twice // 2)
        return ws

    def _power(self, which, n):
        mats = self._pows.setdefault(which, [Matrix.identity(self.dim)])
        base = {"e": self.e, "f": self.f, "k": self.k, "K": self.k_inv}[which]
        while len(mats) <= n:
            mats.append(mats[-1] * base)
        return mats[n]

    def act(self, x):
        """The matrix of a UEAElement on this module."""
        acc = Matrix.zeros(self.dim, self.dim)
        for (a, b, c), s in x.terms.items():
            m = self._power("f", a)
            m = m * (self._power("k", b) if b >= 0 else self._power("K", -b))
            m = m * self._power("e", c)
            acc = acc + m.scale(s)
        return acc


class ModuleMap:
    """A linear map between modules; intertwining with e, f, k is
    checked at construction."""

    def __init__(self, source, target, mat, check=True):
        assert mat.cols == source.dim and mat.rows == target.dim
        self.source = source
        self.target = target
        self.mat = mat
        if check:
            for g in ("e", "f", "k"):
                lhs = mat * getattr(source, g)
                rhs = getattr(target, g) * mat
                assert lhs == rhs, "not an intertwiner (fails on %s)" % g

    def __call__(self, vec):
        return self.mat.apply(vec)


_IRREPS = {}


def irrep(n):
    """The (n+1)-dimensional irreducible with highest weight n."""
    assert n >= 0
    cached = _IRREPS.get(n)
    if cached is not None:
        return cached
    dim = n + 1
    e = Matrix.zeros(dim, dim)
    f = Matrix.zeros(dim, dim)
    k = Matrix.zeros(dim, dim)
    for j in range(dim):
        k.a[j][j] = _UPOW(2 * (n - 2 * j))
        if j > 0:
            e.a[j - 1][j] = qint(j)
        if j < n:
            f.a[j + 1][j] = qint(n - j)
    mod = Module(e, f, k)
    _IRREPS[n] = mod
    return mod


def direct_sum(modules):
    """Block-diagonal direct sum of a list of modules."""
    dim = sum(m.dim for m in modules)
    e = Matrix.zeros(dim, dim)
    f = Matrix.zeros(dim, dim)
    k = Matrix.zeros(dim, dim)
    off = 0
    for m in modules:
        for i in range(m.dim):
            for j in range(m.dim):
                e.a[off + i][off + j] = m.e[i, j]
                f.a[off + i][off + j] = m.f[i, j]
                k.a[off + i][off + j] = m.k[i, j]
        off += m.dim
    return Module(e, f, k)


def tensor(m1, m2):
    """Tensor product module, acting through the coproduct
    D(e) = e (x) k + k^{-1} (x) e (and likewise f); basis index
    (i, j) -> i * m2.dim + j."""
    e = m1.e.tensor(m2.k) + m1.k_inv.tensor(m2.e)
    f = m1.f.tensor(m2.k) + m1.k_inv.tensor(m2.f)
    k = m1.k.tensor(m2.k)
    return Module(e, f, k)


def decompose(mod):
    """Decompose a module with diagonal k-action into irreducibles.

    Returns a list of (n, inclusion, projection) triples of ModuleMaps
    with sum(incl . proj) = id; multiple triples share n when V_n has
    multiplicity.  Raises DecompositionError if the module is not a
    direct sum of irreps V_n."""
    if mod.weights is None:
        raise DecompositionError("k-action is not diagonal with u^{2m} entries")
    chains = []  # (n, [chain vectors])
    for m in sorted(set(mod.weights), reverse=True):
        idx = [i for i, w in enumerate(mod.weights) if w == m]
        # highest-weight vectors of weight m: kernel of e restricted to
        # the weight space
        sub = Matrix.zeros(mod.dim, len(idx))
        for col, i in enumerate(idx):
            for r in range(mod.dim):
                sub.a[r][col] = mod.e[r, i]
        for coords in sub.kernel():
            if m < 0:
                raise DecompositionError("highest-weight vector of negative weight")
            v = [ZERO] * mod.dim
            for col, i in enumerate(idx):
                v[i] = coords[col]
            chain = [v]
            for j in range(m):
                nxt = mod.f.apply(chain[-1])
                co = ONE / qint(m - j)
                chain.append([co * t for t in nxt])
            # f must kill the lowest-weight vector
            bottom = mod.f.apply(chain[-1])
            if any(bottom):
                raise DecompositionError("lowest-weight vector not annihilated by f")
            chains.append((m, chain))
    total = sum(n + 1 for n, _ in chains)
    if total != mod.dim:
        raise DecompositionError("weight chains do not span (dim %d of %d)" % (total, mod.dim))
    # stack the chains as columns and invert for the projections
    basis = Matrix.zeros(mod.dim, mod.dim)
    col = 0
    for n, chain in chains:
        for v in chain:
            for r in range(mod.dim):
                basis.a[r][col] = v[r]
            col += 1
    try:
        inv = basis.inverse()
    except NoSolution:
        raise DecompositionError("weight chains are linearly dependent")
    out = []
    row = 0
    for n, chain in chains:
        vn = irrep(n)
        inc = Matrix.zeros(mod.dim, n + 1)
        prj = Matrix.zeros(n + 1, mod.dim)
        for j in range(n + 1):
            for r in range(mod.dim):
                inc.a[r][j] = basis[r, row + j]
                prj.a[j][r] = inv[row + j, r]
        out.append((n, ModuleMap(vn, mod, inc), ModuleMap(mod, vn, prj)))
        row += n + 1
    return out


# ----------------------------------------------------------------------
# R-matrix

_THETA_A = uea.K * uea.E
_THETA_B = uea.K_INV * uea.F


def theta_coefficient(n):
    """c_n in Theta = sum_n c_n (ke)^n (x) (k^{-1}f)^n."""
    acc = ONE
    for j in range(1, n + 1):
        acc = acc * _QDIFF * _QPOW(j - 2) / qint(j)
    return acc


def theta_inverse_coefficients(nmax):
    """d_0..d_nmax with Theta^{-1} = sum_n d_n (k^n e^n) (x) (k^{-n} f^n).

    The span of E_n (x) F_n with E_n = k^n e^n, F_n = k^{-n} f^n is
    closed under multiplication, (E_m (x) F_m)(E_n (x) F_n)
    = q^{-2mn} E_{m+n} (x) F_{m+n}, so the inverse is a triangular
    recursion against the expansion of Theta in the same basis."""
    # Theta in the E_n (x) F_n basis: (ke)^n = q^{-n(n-1)/2} k^n e^n and
    # the same factor for (k^{-1}f)^n
    chat = [theta_coefficient(n) * _QPOW(-n * (n - 1)) for n in range(nmax + 1)]
    d = [ONE]
    for n in range(1, nmax + 1):
        s = ZERO
        for m in range(n):
            s = s + chat[n - m] * d[m] * _QPOW(-2 * m * (n - m))
        d.append(-s)
    return d


def cartan_factor(m1, m2):
    """The diagonal operator u^{2 m m'} on a pair of weight modules."""
    assert m1.weights is not None and m2.weights is not None
    dim = m1.dim * m2.dim
    c = Matrix.zeros(dim, dim)
    for i, wi in enumerate(m1.weights):
        for j, wj in enumerate(m2.weights):
            c.a[i * m2.dim + j][i * m2.dim + j] = _UPOW(2 * wi * wj)
    return c


def universal_R(m1, m2):
    """The R-matrix on m1 (x) m2 (in the tensor basis of `tensor`)."""
    dim = m1.dim * m2.dim
    theta = Matrix.identity(dim)
    n = 1
    while True:
        a_n = m1.act(_THETA_A ** n)
        b_n = m2.act(_THETA_B ** n)
        if a_n.is_zero() or b_n.is_zero():
            break
        theta = theta + a_n.tensor(b_n).scale(theta_coefficient(n))
        n += 1
    return cartan_factor(m1, m2) * theta


def universal_R_inverse(m1, m2):
    """The inverse R-matrix, via the closed-form series for Theta^{-1}
    (checked against universal_R in the tests)."""
    dim = m1.dim * m2.dim
    nmax = min(i for i, mod in ((m1.dim, m1), (m2.dim, m2)))
    d = theta_inverse_coefficients(nmax)
    theta_inv = Matrix.zeros(dim, dim)
    for n in range(nmax + 1):
        # k^n e^n is the PBW monomial (0, n, n); k^{-n} f^n is not PBW
        # (it is q^{n^2} f^n k^{-n}), so build it as an honest product
        a_n = m1.act(uea.monomial(0, n, n))
        b_n = m2.act(uea.K_INV ** n * uea.F ** n)
        if a_n.is_zero() or b_n.is_zero():
            break
        theta_inv = theta_inv + a_n.tensor(b_n).scale(d[n])
    return theta_inv * cartan_factor(m1, m2).inverse()


def flip_matrix(d1, d2):
    """The flip V1 (x) V2 -> V2 (x) V1 on tensor-basis indices."""
    m = Matrix.zeros(d1 * d2, d1 * d2)
    for i in range(d1):
        for j in range(d2):
            m.a[j * d1 + i][i * d2 + j] = ONE
    return m


def braiding_map(m1, m2):
    """flip . R as a ModuleMap m1 (x) m2 -> m2 (x) m1 (the check at
    construction proves the intertwining property of R)."""
    mat = flip_matrix(m1.dim, m2.dim) * universal_R(m1, m2)
    return ModuleMap(tensor(m1, m2), tensor(m2, m1), mat)
