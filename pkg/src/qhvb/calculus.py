"""Left-covariant differential calculus on the quantum group.

A finite-dimensional module Wc with diagonal weights determines a
first-order calculus through its L-operators.  With d = dim Wc and
K = d^2, the shift functionals

    F_{(r s),(i j)} = S(L+_{i r}) L-_{s j}      (composite indices)

and the tangent functionals

    X_b = sum_r F_{(r r), b} - [b diagonal] 1

satisfy the structure identities

    eps(X_a) = 0,                 eps(F_{a b}) = delta_{a b},
    D(F_{a b}) = sum_c F_{a c} (x) F_{c b},
    D(X_a)   = 1 (x) X_a + sum_b X_b (x) F_{b a},

all of which are verified exactly at construction.  The space of
invariant one-forms has basis omega_a, a = 1..K; every form is written
in left-trivialized coordinates as a sum of coefficients in T_q times
words in the omega_a, where multiplication shifts coefficients through
the word by F:

    omega_a . b = sum_c (F_{a c} o b) omega_c,
    d b        = sum_c (X_c o b) omega_c = theta b - b theta,

with theta the sum of the diagonal omega_a.  The exterior algebra is
the quotient of the tensor algebra on the omega_a by the two-sided
ideal generated by ker sigma_-, where sigma is the braiding on the
invariant forms and sigma = sigma_+ - sigma_- is its unique splitting
with sigma_+ sigma_- = 0 classified by the sign of each eigenvalue at
u = 1.  The differential in higher degree is the graded commutator
with theta; d^2 = 0 because theta^2 reduces to zero.
"""

import itertools

from .scalars import Scalar, Matrix, Echelon, ZERO, ONE, eval_at, NoSolution
from . import uea, repmod, coeff, homspace

_UPOW = Scalar.u_power


class AxiomViolation(Exception):
    """A structure identity of the calculus data failed."""


class SplitError(Exception):
    """The braiding does not split by eigenvalue sign at u = 1."""


class DomainError(Exception):
    """A form lies outside the restricted calculus."""


# ----------------------------------------------------------------------
# polynomials over the scalar field (for eigenvalue extraction);
# coefficient lists are lowest-degree first

def _poly_mul(p, q):
    out = [ZERO] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if not a:
            continue
        for j, b in enumerate(q):
            if b:
                out[i + j] = out[i + j] + a * b
    return out


def _poly_eval(p, x):
    acc = ZERO
    for c in reversed(p):
        acc = acc * x + c
    return acc


def _poly_div_linear(p, root):
    """Exact quotient p / (t - root); the remainder must vanish."""
    out = [ZERO] * (len(p) - 1)
    carry = ZERO
    for i in range(len(p) - 1, 0, -1):
        carry = p[i] + carry
        out[i - 1] = carry
        carry = carry * root
    assert p[0] + carry == ZERO, "nonzero remainder in deflation"
    return out


def _char_poly(m):
    """det(t I - M) by cofactor expansion over polynomial entries."""
    r = m.rows
    entries = [[[-m[i, j], ONE] if i == j else [-m[i, j]]
                for j in range(r)] for i in range(r)]

    def det(rows, cols):
        if len(rows) == 1:
            return entries[rows[0]][cols[0]]
        acc = [ZERO]
        for pos, c in enumerate(cols):
            term = _poly_mul(entries[rows[0]][c],
                             det(rows[1:], cols[:pos] + cols[pos + 1:]))
            if pos % 2:
                term = [-x for x in term]
            acc = [a + b for a, b in
                   zip(acc + [ZERO] * (len(term) - len(acc)),
                       term + [ZERO] * (len(acc) - len(term)))]
        return acc

    return det(list(range(r)), list(range(r)))


def _monomial_roots(p, max_exp=48):
    """Roots of a monic scalar polynomial, required to be of the form
    +- u^k; raises SplitError otherwise.  Returned with multiplicity."""
    roots = []
    cur = list(p)
    while len(cur) > 1:
        found = None
        for k in sorted(range(-max_exp, max_exp + 1), key=abs):
            for cand in (_UPOW(k), -_UPOW(k)):
                if _poly_eval(cur, cand) == ZERO:
                    found = cand
                    break
            if found is not None:
                break
        if found is None:
            raise SplitError("eigenvalue is not a signed power of u")
        roots.append(found)
        cur = _poly_div_linear(cur, found)
    return roots


# ----------------------------------------------------------------------
# L-operators and the calculus data

def l_plus(wc):
    """Matrix of elements L+_{r s} = k^{m_r} sum_n c_n pi((k^{-1}f)^n)_{r s} (k e)^n."""
    weights = wc.weights
    assert weights is not None, "diagonal weights required"
    ke = uea.K * uea.E
    kf = uea.K_INV * uea.F
    out = [[uea.UEAElement() for _ in range(wc.dim)] for _ in range(wc.dim)]
    n = 0
    while True:
        low = wc.act(kf ** n)
        if low == Matrix.zeros(wc.dim, wc.dim):
            break
        c_n = repmod.theta_coefficient(n)
        for r in range(wc.dim):
            for s in range(wc.dim):
                if low[r, s]:
                    term = (uea.monomial(0, weights[r], 0) * ke ** n)
                    out[r][s] = out[r][s] + term.scale(c_n * low[r, s])
        n += 1
    return out


def l_minus(wc):
    """Matrix of elements L-_{r s} = [sum_n d_n pi(k^n e^n)_{r s} k^{-n} f^n] k^{-m_s}."""
    weights = wc.weights
    assert weights is not None, "diagonal weights required"
    nmax = 0
    while wc.act(uea.monomial(0, nmax + 1, nmax + 1)) != Matrix.zeros(wc.dim, wc.dim):
        nmax += 1
    d = repmod.theta_inverse_coefficients(nmax)
    out = [[uea.UEAElement() for _ in range(wc.dim)] for _ in range(wc.dim)]
    for n in range(nmax + 1):
        high = wc.act(uea.monomial(0, n, n))  # k^n e^n is already normal form
        low = uea.K_INV ** n * uea.F ** n  # k^{-n} f^n is not: build honestly
        for r in range(wc.dim):
            for s in range(wc.dim):
                if high[r, s]:
                    term = low * uea.monomial(0, -weights[s], 0)
                    out[r][s] = out[r][s] + term.scale(d[n] * high[r, s])
    return out


def _check_l_matrix(l, label):
    dim = len(l)
    for r in range(dim):
        for s in range(dim):
            want = ONE if r == s else ZERO
            if uea.counit(l[r][s]) != want:
                raise AxiomViolation("counit of %s" % label)
            acc = uea.TensorUEA()
            for t in range(dim):
                acc = acc + uea.tensor(l[r][t], l[t][s])
            if uea.coproduct(l[r][s]) != acc:
                raise AxiomViolation("coproduct of %s" % label)


class CalculusData:
    """The invariant data of the first-order calculus built from Wc:
    K tangent functionals X, the K x K shift functionals F, the list of
    diagonal indices whose sum of invariant forms is theta, and (when
    the X are independent) the module structure on the invariant forms
    obtained from the right adjoint action on the tangent space."""

    def __init__(self, wc, K, F, X, diagonal, nondegenerate, module):
        self.wc = wc
        self.K = K
        self.F = F
        self.X = X
        self.diagonal = diagonal
        self.nondegenerate = nondegenerate
        self.module = module


def _right_adjoint(x, g):
    out = uea.UEAElement()
    for (m1, m2), s in uea.coproduct(g).terms.items():
        term = uea.antipode(uea.monomial(*m1)) * x * uea.monomial(*m2)
        out = out + term.scale(s)
    return out


def _tangent_module(X, K):
    """Solve the right adjoint action on span{X_a} and return the module
    it defines on the invariant forms: with X_a <| g = sum_b N(g)_{b a} X_b
    the matrices M(g) = N(g)^T satisfy M(gh) = M(g) M(h), and they are
    dual to the coaction under which the coefficient shift of the forms
    is covariant (the Module constructor checks the defining relations;
    the braiding construction checks the covariance)."""
    keys = sorted(set(m for x in X for m in x.terms))
    idx = {m: r for r, m in enumerate(keys)}
    span = Matrix.zeros(len(keys), K)
    for b, x in enumerate(X):
        for m, s in x.terms.items():
            span.a[idx[m]][b] = s

    def action(g):
        rhs = Matrix.zeros(len(keys), K)
        for a, x in enumerate(X):
            image = _right_adjoint(x, g)
            for m, s in image.terms.items():
                if m not in idx:
                    raise AxiomViolation("adjoint image leaves the tangent span")
                rhs.a[idx[m]][a] = s
        try:
            return span.solve(rhs).transpose()
        except NoSolution:
            raise AxiomViolation("adjoint image leaves the tangent span")

    return repmod.Module(action(uea.E), action(uea.F), action(uea.K))


def from_rep(wc):
    """Build and verify the calculus data from a module with diagonal
    weights.  Raises AxiomViolation when a structure identity fails."""
    d = wc.dim
    K = d * d
    lp = l_plus(wc)
    lm = l_minus(wc)
    _check_l_matrix(lp, "raising half")
    _check_l_matrix(lm, "lowering half")
    slp = [[uea.antipode(lp[i][r]) for r in range(d)] for i in range(d)]

    def flat(r, s):
        return r * d + s

    F = [[None] * K for _ in range(K)]
    for r in range(d):
        for s in range(d):
            for i in range(d):
                for j in range(d):
                    F[flat(r, s)][flat(i, j)] = slp[i][r] * lm[s][j]
    diagonal = [flat(r, r) for r in range(d)]
    X = []
    for b in range(K):
        x = uea.UEAElement()
        for a in diagonal:
            x = x + F[a][b]
        if b in diagonal:
            x = x - uea.UNIT
        X.append(x)

    for a in range(K):
        if uea.counit(X[a]) != ZERO:
            raise AxiomViolation("counit of tangent functional")
        for b in range(K):
            if uea.counit(F[a][b]) != (ONE if a == b else ZERO):
                raise AxiomViolation("counit of shift functional")
    for a in range(K):
        for b in range(K):
            acc = uea.TensorUEA()
            for c in range(K):
                acc = acc + uea.tensor(F[a][c], F[c][b])
            if uea.coproduct(F[a][b]) != acc:
                raise AxiomViolation("coproduct of shift functional")
    for a in range(K):
        acc = uea.tensor(uea.UNIT, X[a])
        for b in range(K):
            acc = acc + uea.tensor(X[b], F[b][a])
        if uea.coproduct(X[a]) != acc:
            raise AxiomViolation("coproduct of tangent functional")

    keys = sorted(set(m for x in X for m in x.terms))
    span = Matrix.zeros(len(keys), K)
    for b, x in enumerate(X):
        for m, s in x.terms.items():
            span.a[keys.index(m)][b] = s
    nondegenerate = span.rank() == K
    module = _tangent_module(X, K) if nondegenerate else None
    return CalculusData(wc, K, F, X, diagonal, nondegenerate, module)


# ----------------------------------------------------------------------
# forms

class FormElement:
    """A left-trivialized form: coordinates map length-n words in the
    invariant one-form basis to coefficients in T_q."""

    def __init__(self, degree, coords=None, reduced=False):
        self.degree = degree
        self.coords = {}
        for key, f in (coords or {}).items():
            assert len(key) == degree
            if not f.is_zero():
                self.coords[key] = f
        self.reduced = reduced

    def is_zero(self):
        return not self.coords

    @property
    def level(self):
        return max([f.level for f in self.coords.values()] or [0])

    def _merge(self, other, sign):
        assert self.degree == other.degree
        out = dict(self.coords)
        for key, f in other.coords.items():
            g = out.get(key)
            out[key] = f.scale(sign) if g is None else g + f.scale(sign)
        return FormElement(self.degree, out)

    def __add__(self, other):
        return self._merge(other, ONE)

    def __sub__(self, other):
        return self._merge(other, -ONE)

    def scale(self, s):
        return FormElement(self.degree,
                           {k: f.scale(s) for k, f in self.coords.items()},
                           reduced=self.reduced)

    def vector(self):
        """Sparse coordinates keyed (word, peter-weyl key)."""
        out = {}
        for key, f in self.coords.items():
            for pw, s in f.terms.items():
                out[(key, pw)] = s
        return out

    def __eq__(self, other):
        return self.degree == other.degree and self.coords == other.coords

    def __repr__(self):
        if not self.coords:
            return "FormElement(%d, 0)" % self.degree
        bits = ["(%s) w%s" % (f, list(key)) for key, f in sorted(self.coords.items())]
        return "FormElement(%d, %s)" % (self.degree, " + ".join(bits))


class Calculus:
    """The calculus operations bound to a coefficient algebra window."""

    def __init__(self, algebra, data):
        assert data.nondegenerate, "degenerate calculus (zero tangent space)"
        assert data.module.weights is not None
        self.algebra = algebra
        self.data = data
        self.K = data.K
        self._transfer = {}
        self._split = None
        self._j_ech = {}

    # -- basic forms ---------------------------------------------------

    def form0(self, f):
        return FormElement(0, {(): f}, reduced=True)

    def zero(self, degree):
        return FormElement(degree, {}, reduced=True)

    def theta(self):
        return FormElement(1, {(a,): coeff.unit() for a in self.data.diagonal},
                           reduced=True)

    def d0(self, f):
        """df = sum_c (X_c o f) omega_c; preserves coefficient levels."""
        coords = {}
        for c in range(self.K):
            g = self.algebra.circle(self.data.X[c], f)
            if not g.is_zero():
                coords[(c,)] = g
        return FormElement(1, coords, reduced=True)

    # -- multiplication ------------------------------------------------

    def _f_transfer(self, n):
        """K x K table of transposed level-n blocks of the shift
        functionals (None marks a zero block)."""
        table = self._transfer.get(n)
        if table is None:
            mod = repmod.irrep(n)
            table = []
            for a in range(self.K):
                row = []
                for c in range(self.K):
                    mat = mod.act(self.data.F[a][c]).transpose()
                    row.append(mat if any(any(r) for r in mat.a) else None)
                table.append(row)
            self._transfer[n] = table
        return table

    def _word_action(self, word, b):
        """All pairs (new word C, (F_{a1 c1} ... F_{an cn}) o b) for the
        given word (a1..an); the shift operators act on each Peter-Weyl
        block of b by right multiplication with transposed F-blocks,
        rightmost letter first."""
        if not word:
            return [((), b)]
        states = {(): self.algebra._to_blocks(b)}
        for a in reversed(word):
            nxt = {}
            for suffix, blocks in states.items():
                for c in range(self.K):
                    res = {}
                    for n, blk in blocks.items():
                        t = self._f_transfer(n)[a][c]
                        if t is None:
                            continue
                        m = blk * t
                        if any(any(r) for r in m.a):
                            res[n] = m
                    if res:
                        nxt[(c,) + suffix] = res
            states = nxt
        return [(key, self.algebra._from_blocks(blocks))
                for key, blocks in states.items()]

    def multiply(self, w1, w2):
        """(a (x) w_I)(b (x) w_J) = sum_C a ((F-word)_{I C} o b) (x) w_{C ++ J}."""
        out = {}
        for I, a in w1.coords.items():
            for J, b in w2.coords.items():
                for C, g in self._word_action(I, b):
                    prod = self.algebra.multiply(a, g)
                    if prod.is_zero():
                        continue
                    key = C + J
                    acc = out.get(key)
                    out[key] = prod if acc is None else acc + prod
        return FormElement(w1.degree + w2.degree, out)

    def right_mult(self, w, b):
        return self.multiply(w, self.form0(b))

    def left_mult(self, a, w):
        return self.multiply(self.form0(a), w)

    def d(self, w):
        """Graded commutator with theta, reduced: degree n goes to n+1."""
        th = self.theta()
        out = self.multiply(th, w) - self.multiply(w, th).scale(
            -ONE if w.degree % 2 else ONE)
        return self.reduce_mod_J(out)

    # -- braiding and the exterior ideal ---------------------------------

    def braiding(self):
        if self._split is None:
            sigma = _braiding_matrix(self.data.wc, self.data.F)
            self._split = BraidingSplit(self.data.module, sigma)
        return self._split

    def _kernel_vectors(self):
        """Basis of ker sigma_- as weight-homogeneous sparse vectors
        keyed by letter pairs, with their total weights."""
        split = self.braiding()
        wts = self.data.module.weights
        out = []
        for vec in split.sigma_minus.kernel():
            kv = {}
            weight = None
            for a in range(self.K):
                for b in range(self.K):
                    s = vec[a * self.K + b]
                    if s:
                        kv[(a, b)] = s
                        w = wts[a] + wts[b]
                        assert weight is None or weight == w
                        weight = w
            out.append((weight, kv))
        return out

    def _j_echelon(self, degree):
        """Per-weight echelon bases of the degree-n piece of the ideal
        generated by ker sigma_-; the coefficient factor is free."""
        cached = self._j_ech.get(degree)
        if cached is not None:
            return cached
        wts = self.data.module.weights
        ech = {}
        if degree >= 2:
            kernel = self._kernel_vectors()
            letters = range(self.K)
            for i in range(degree - 1):
                for prefix in itertools.product(letters, repeat=i):
                    wp = sum(wts[a] for a in prefix)
                    for suffix in itertools.product(letters, repeat=degree - 2 - i):
                        ws = sum(wts[a] for a in suffix)
                        for wk, kv in kernel:
                            vec = {prefix + ab + suffix: s for ab, s in kv.items()}
                            ech.setdefault(wp + wk + ws, Echelon()).add(vec)
        self._j_ech[degree] = ech
        return ech

    def reduce_mod_J(self, w):
        """Canonical representative modulo the exterior ideal, computed
        per Peter-Weyl key and per total letter weight."""
        if w.degree < 2:
            return FormElement(w.degree, w.coords, reduced=True)
        ech = self._j_echelon(w.degree)
        wts = self.data.module.weights
        per_pw = {}
        for key, f in w.coords.items():
            weight = sum(wts[a] for a in key)
            for pw, s in f.terms.items():
                per_pw.setdefault((pw, weight), {})[key] = s
        coords = {}
        for (pw, weight), vec in per_pw.items():
            e = ech.get(weight)
            red = e.reduce(vec) if e is not None else vec
            for key, s in red.items():
                acc = coords.setdefault(key, coeff.CoeffElement())
                coords[key] = acc + coeff.basis_element(*pw, coeff=s)
        return FormElement(w.degree, coords, reduced=True)

    def omega_dims(self, n):
        """Dimension of the degree-n component of the exterior algebra
        over the invariant forms."""
        if n == 0:
            return 1
        if n == 1:
            return self.K
        rank = sum(e.rank for e in self._j_echelon(n).values())
        return self.K ** n - rank

    # -- covariance actions ----------------------------------------------

    def dot_on_forms(self, x, w):
        """Left translation acts on the coefficients only (the invariant
        form legs are left-invariant)."""
        return FormElement(w.degree,
                           {key: self.algebra.dot(x, f)
                            for key, f in w.coords.items()},
                           reduced=w.reduced)

    def restrict(self, N):
        return Restriction(self, N)


def _braiding_matrix(wc, F):
    """The braiding on the invariant forms.  The forms carry the right
    coaction w_a -> sum_b w_b (x) tau_{b a} with coefficient matrix
    tau_{(i j),(r s)} = t_{i r} S(t_{s j}) in the matrix coefficients of
    Wc (the unique comodule matrix compatible with the right
    multiplication rule), and the braiding moves the coacted leg in
    front of the shifted one:

        sigma(w_a (x) w_b) = sum_{c,d} <F_{a c}, tau_{d b}> w_d (x) w_c.

    Expanding the pairing through D(F) leaves only representation data:
    <F_{a c}, tau_{d b}> = sum_e pi(F_{a e})_{d1 b1} pi(S(F_{e c}))_{b2 d2}."""
    dim = wc.dim
    K = dim * dim
    fa = [[wc.act(F[a][e]) for e in range(K)] for a in range(K)]
    fs = [[wc.act(uea.antipode(F[e][c])) for c in range(K)] for e in range(K)]
    sigma = Matrix.zeros(K * K, K * K)
    for a in range(K):
        for b in range(K):
            b1, b2 = divmod(b, dim)
            for dd in range(K):
                d1, d2 = divmod(dd, dim)
                for c in range(K):
                    acc = ZERO
                    for e in range(K):
                        x = fa[a][e][d1, b1]
                        if x:
                            y = fs[e][c][b2, d2]
                            if y:
                                acc = acc + x * y
                    if acc:
                        sigma.a[dd * K + c][a * K + b] = acc
    return sigma


class BraidingSplit:
    """The braiding sigma on the invariant forms, split as
    sigma_+ - sigma_- by the sign of each eigenvalue at u = 1, with
    sigma_+ sigma_- = sigma_- sigma_+ = 0.  Eigenvalues are computed
    exactly on the multiplicity space of each isotypic component."""

    def __init__(self, module, sigma):
        self.module = module
        K = module.dim
        tm = repmod.tensor(module, module)
        self.sigma = sigma
        groups = {}
        for n, inc, prj in repmod.decompose(tm):
            groups.setdefault(n, []).append((inc, prj))
        plus = Matrix.zeros(K * K, K * K)
        minus = Matrix.zeros(K * K, K * K)
        self.eigenvalues = []
        for n, members in sorted(groups.items()):
            r = len(members)
            m = Matrix.zeros(r, r)
            for i, (inci, prji) in enumerate(members):
                for j, (incj, prjj) in enumerate(members):
                    block = prji.mat * self.sigma * incj.mat
                    s = block[0, 0]
                    assert block == Matrix.identity(n + 1).scale(s), \
                        "braiding block is not scalar"
                    m.a[i][j] = s
            roots = _monomial_roots(_char_poly(m))
            distinct = []
            for lam in roots:
                if lam not in distinct:
                    distinct.append(lam)
            # diagonalizability: the squarefree minimal polynomial must vanish
            prod = Matrix.identity(r)
            for lam in distinct:
                prod = prod * (m - Matrix.identity(r).scale(lam))
            if prod != Matrix.zeros(r, r):
                raise SplitError("multiplicity block is not diagonalizable")
            s_plus = Matrix.zeros(r, r)
            s_minus = Matrix.zeros(r, r)
            for lam in distinct:
                proj = Matrix.identity(r)
                for mu in distinct:
                    if mu != lam:
                        proj = proj * (m - Matrix.identity(r).scale(mu)) \
                            .scale(ONE / (lam - mu))
                sign = eval_at(lam, 1)
                if sign == 0:
                    raise SplitError("eigenvalue vanishes at u = 1")
                if sign > 0:
                    s_plus = s_plus + proj.scale(lam)
                else:
                    s_minus = s_minus - proj.scale(lam)
                self.eigenvalues.append((lam, n, roots.count(lam)))
            for i, (inci, prji) in enumerate(members):
                for j, (incj, prjj) in enumerate(members):
                    if s_plus[i, j]:
                        plus = plus + (inci.mat * prjj.mat).scale(s_plus[i, j])
                    if s_minus[i, j]:
                        minus = minus + (inci.mat * prjj.mat).scale(s_minus[i, j])
        self.sigma_plus = plus
        self.sigma_minus = minus
        assert self.sigma_plus - self.sigma_minus == self.sigma
        zero = Matrix.zeros(K * K, K * K)
        assert self.sigma_plus * self.sigma_minus == zero
        assert self.sigma_minus * self.sigma_plus == zero
        for g in ("e", "f", "k"):
            mat = getattr(tm, g)
            assert self.sigma_plus * mat == mat * self.sigma_plus
            assert self.sigma_minus * mat == mat * self.sigma_minus
        assert self.sigma.eval_at(1) == repmod.flip_matrix(K, K).eval_at(1)


# ----------------------------------------------------------------------
# restriction to the homogeneous space

class Restriction:
    """The calculus restricted to the invariant subalgebra: per degree a
    basis of the span of forms a db_1 ... db_n with invariant entries
    from the level-N basis, stored reduced and with presentations so the
    subalgebra generators can act through their coproducts."""

    def __init__(self, calc, N):
        self.calc = calc
        self.N = N
        algebra = calc.algebra
        inv = homspace.invariants(algebra, homspace.ThetaChoice(), N)
        self.invariants = inv
        self.bases = {}
        self.echelons = {}
        self.filtration = {}
        for degree in (0, 1, 2):
            basis = []
            ech = Echelon()
            filt = []
            for bound in range(degree * N + N + 1):
                for combo in self._presentations(degree, bound):
                    form = self._realize(combo)
                    if form.is_zero():
                        continue
                    if ech.add(form.vector()):
                        basis.append({"form": form, "presentation": combo})
                filt.append(ech.rank)
            self.bases[degree] = basis
            self.echelons[degree] = ech
            self.filtration[degree] = filt

    def _presentations(self, degree, bound):
        """Tuples (a, (b_1..b_degree)) of invariant basis elements with
        total level exactly `bound`."""
        elements = self.invariants.elements
        out = []
        for a in elements:
            for bs in itertools.product(elements, repeat=degree):
                total = a.level + sum(b.level for b in bs)
                if total == bound:
                    out.append((a, bs))
        return out

    def _realize(self, combo):
        a, bs = combo
        form = self.calc.form0(a)
        for b in bs:
            form = self.calc.multiply(form, self.calc.d0(b))
        return self.calc.reduce_mod_J(form)

    def dims(self):
        return {degree: len(self.bases[degree]) for degree in self.bases}

    def contains(self, w):
        w = self.calc.reduce_mod_J(w)
        ech = self.echelons.get(w.degree)
        if ech is None:
            return False
        return not ech.reduce(w.vector())

    def closure_check(self, degree):
        """d maps the degree-n restricted space into the degree-(n+1)
        one; returns the per-element results."""
        results = []
        for entry in self.bases[degree]:
            image = self.calc.d(entry["form"])
            results.append(image.is_zero() or self.contains(image))
        return results

    def present(self, w):
        """Coordinates of a form in the stored basis; DomainError when
        the form lies outside the restricted span."""
        w = self.calc.reduce_mod_J(w)
        basis = self.bases.get(w.degree)
        if basis is None:
            raise DomainError("degree outside the restriction tables")
        keys = sorted(set(k for e in basis for k in e["form"].vector())
                      | set(w.vector()))
        idx = {k: r for r, k in enumerate(keys)}
        m = Matrix.zeros(len(keys), len(basis))
        for c, e in enumerate(basis):
            for k, s in e["form"].vector().items():
                m.a[idx[k]][c] = s
        rhs = [ZERO] * len(keys)
        for k, s in w.vector().items():
            rhs[idx[k]] = s
        try:
            return m.solve(rhs)
        except NoSolution:
            raise DomainError("form is outside the restricted calculus")

    def circle_presented(self, p, combo):
        """p o (a db_1 ... db_n) = sum (p_(1) o a) d(p_(2) o b_1) ...,
        through the iterated coproduct of p."""
        a, bs = combo
        calc = self.calc
        algebra = calc.algebra
        out = calc.zero(len(bs))
        for key, s in uea.iterated_coproduct(p, len(bs) + 1).items():
            form = calc.form0(algebra.circle(uea.monomial(*key[0]), a).scale(s))
            for leg, b in zip(key[1:], bs):
                form = calc.multiply(
                    form, calc.d0(algebra.circle(uea.monomial(*leg), b)))
            out = out + form
        return calc.reduce_mod_J(out)

    def circle_on_forms(self, p, w):
        """The subalgebra action on a restricted form, through its basis
        presentation."""
        coords = self.present(w)
        out = self.calc.zero(w.degree)
        for c, entry in zip(coords, self.bases[w.degree]):
            if c:
                out = out + self.circle_presented(p, entry["presentation"]).scale(c)
        return out

    def report(self):
        return {
            "level_bound": self.N,
            "dims": self.dims(),
            "filtration": self.filtration,
            "closure": {n: all(self.closure_check(n)) for n in (0, 1)},
        }
