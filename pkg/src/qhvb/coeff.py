"""The coefficient Hopf algebra T_q of U_q(sl2) in the Peter-Weyl basis.

T_q is spanned by the matrix coefficients t^{(n)}_{ij} of the
irreducibles V_n, paired with U_q by

    < t^{(n)}_{ij}, x > = (matrix of x on V_n)_{ij}.

Elements are maps (n, i, j) -> Scalar.  Products are computed through
the dual pairing, (fg)(x) = sum f(x_(1)) g(x_(2)), and re-expanded in
the basis using the exact Clebsch-Gordan embeddings from
repmod.decompose; the coproduct, counit, antipode, star, the two
translation actions, and the Haar functional all land back in the
basis.

Every algebra carries a level window n_max; any operation that would
produce a nonzero coefficient beyond the window raises LevelOverflow
instead of truncating.

The pairing respects the "diagonal class" d = i - j: t^{(n)}_{ij}
pairs nonzero with the PBW monomial f^a k^b e^c only when a - c =
i - j.  All basis re-expansions (antipode, star, reconstruction from
evaluations) therefore split into small exact solves per class, and
the nondegeneracy certificate (PairingTable) is a per-class column
rank computation.
"""

from .scalars import Scalar, Matrix, Echelon, ZERO, ONE, NoSolution
from . import uea, repmod


class LevelOverflow(Exception):
    """An exact result has a nonzero coefficient beyond the configured
    level window (the operation was not performed approximately)."""


class CoeffElement:
    """A finite Scalar-linear combination of Peter-Weyl coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {key: s for key, s in (terms or {}).items() if s}

    @property
    def level(self):
        return max((n for (n, i, j) in self.terms), default=0)

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other):
        out = dict(self.terms)
        for key, s in other.terms.items():
            cur = out.get(key, ZERO) + s
            if cur:
                out[key] = cur
            elif key in out:
                del out[key]
        return CoeffElement(out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return CoeffElement({key: -s for key, s in self.terms.items()})

    def scale(self, s):
        if isinstance(s, int):
            s = Scalar(s)
        if not s:
            return CoeffElement()
        return CoeffElement({key: s * t for key, t in self.terms.items()})

    def __eq__(self, other):
        return isinstance(other, CoeffElement) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def coefficient(self, key):
        return self.terms.get(key, ZERO)

    def entries(self):
        """Sorted (n, i, j, scalar-string) rows for reports."""
        return [[n, i, j, str(self.terms[(n, i, j)])] for (n, i, j) in sorted(self.terms)]

    def __str__(self):
        if not self.terms:
            return "0"
        bits = []
        for key in sorted(self.terms):
            s = str(self.terms[key])
            name = "1" if key == (0, 0, 0) else "t[%d;%d,%d]" % key
            if s == "1" and name != "1":
                bits.append(name)
            else:
                if any(ch in s for ch in "+/ ") or "-" in s[1:]:
                    s = "(%s)" % s
                bits.append(s if name == "1" else "%s %s" % (s, name))
        return " + ".join(bits)

    __repr__ = __str__


def unit():
    return CoeffElement({(0, 0, 0): ONE})


def basis_element(n, i, j, coeff=ONE):
    assert 0 <= i <= n and 0 <= j <= n
    return CoeffElement({(n, i, j): coeff})


def _class_monomials(d, N):
    """PBW monomials of diagonal class a - c = d used for separating
    Peter-Weyl columns up to level N."""
    out = []
    for t in range(N - abs(d) + 1):
        a = max(d, 0) + t
        c = max(-d, 0) + t
        for b in range(N + 1):
            out.append((a, b, c))
    return out


class PairingTable:
    """Evaluation matrix of Peter-Weyl basis elements (level <= N)
    against the per-class PBW monomial families; certifies that
    evaluation separates the basis (full column rank per class) and
    reconstructs elements from their values."""

    def __init__(self, N):
        self.N = N
        self.columns = {}
        self.monomials = {}
        self.matrix = {}
        for d in range(-N, N + 1):
            cols = [
                (n, i, i - d)
                for n in range(abs(d), N + 1)
                for i in range(max(d, 0), n + min(d, 0) + 1)
            ]
            if not cols:
                continue
            monos = _class_monomials(d, N)
            m = Matrix.zeros(len(monos), len(cols))
            for r, mono in enumerate(monos):
                acts = {}
                for c, (n, i, j) in enumerate(cols):
                    if n not in acts:
                        acts[n] = repmod.irrep(n).act(uea.monomial(*mono))
                    m.a[r][c] = acts[n][i, j]
            self.columns[d] = cols
            self.monomials[d] = monos
            self.matrix[d] = m

    def full_column_rank(self):
        return all(m.rank() == m.cols for d, m in self.matrix.items())

    def certify(self):
        for d, m in self.matrix.items():
            if m.rank() != m.cols:
                raise AssertionError(
                    "pairing table rank deficiency in class d=%d (rank %d of %d)"
                    % (d, m.rank(), m.cols)
                )
        return True

    def expand(self, value_fn):
        """Reconstruct the CoeffElement of level <= N whose pairing with
        every family monomial matches value_fn((a, b, c)); raises
        NoSolution if no such element exists.  The result is the unique
        window element interpolating the sample values: callers must know
        on other grounds that their functional is supported on levels
        <= N, since a higher-level functional can agree with a window
        element on the finite sample family."""
        terms = {}
        for d, cols in self.columns.items():
            rhs = [value_fn(mono) for mono in self.monomials[d]]
            if not any(rhs):
                continue
            sol = self.matrix[d].solve(rhs)
            for c, key in enumerate(cols):
                if sol[c]:
                    terms[key] = sol[c]
        return CoeffElement(terms)


class Algebra:
    """T_q with a level window n_max and all derived tables cached."""

    def __init__(self, n_max=6):
        assert n_max >= 2
        self.n_max = n_max
        self._cg = {}
        self._pair_prod = {}
        self._class_inv = {}
        self._antipode_blocks = {}
        self._star_blocks = {}
        self._mono_act = {}
        self._pairing_tables = {}

    # -- pairing ------------------------------------------------------

    def _act_entry(self, n, mono, i, j):
        mat = self._mono_act.get((n, mono))
        if mat is None:
            mat = repmod.irrep(n).act(uea.monomial(*mono))
            self._mono_act[(n, mono)] = mat
        return mat[i, j]

    def eval(self, f, x):
        """The dual pairing <f, x>."""
        acc = ZERO
        for (n, i, j), s in f.terms.items():
            for mono, c in x.terms.items():
                acc = acc + s * c * self._act_entry(n, mono, i, j)
        return acc

    def pairing_table(self, N):
        table = self._pairing_tables.get(N)
        if table is None:
            table = PairingTable(N)
            table.certify()
            self._pairing_tables[N] = table
        return table

    def from_evaluations(self, value_fn, N):
        """Reconstruct an element known to have level <= N from its
        pairings (see PairingTable.expand for the membership caveat)."""
        return self.pairing_table(N).expand(value_fn)

    # -- multiplication ------------------------------------------------

    def _cg_data(self, m, n):
        data = self._cg.get((m, n))
        if data is None:
            t = repmod.tensor(repmod.irrep(m), repmod.irrep(n))
            data = [(p, inc.mat, prj.mat) for p, inc, prj in repmod.decompose(t)]
            self._cg[(m, n)] = data
        return data

    def _basis_product(self, m, i, j, n, k, l):
        """t^{(m)}_{ij} t^{(n)}_{kl} in the Peter-Weyl basis: since
        (fg)(x) = (f (x) g)(D x) and (pi_m (x) pi_n)(D x) decomposes by
        Clebsch-Gordan, the product re-expands through the embeddings."""
        key = (m, i, j, n, k, l)
        out = self._pair_prod.get(key)
        if out is None:
            out = {}
            row = i * (n + 1) + k
            col = j * (n + 1) + l
            for p, inc, prj in self._cg_data(m, n):
                for r in range(p + 1):
                    left = inc[row, r]
                    if not left:
                        continue
                    for s in range(p + 1):
                        c = left * prj[s, col]
                        if c:
                            cur = out.get((p, r, s), ZERO) + c
                            if cur:
                                out[(p, r, s)] = cur
                            elif (p, r, s) in out:
                                del out[(p, r, s)]
            self._pair_prod[key] = out
        return out

    def multiply(self, f, g):
        out = {}
        for (m, i, j), s in f.terms.items():
            for (n, k, l), t in g.terms.items():
                st = s * t
                for key, c in self._basis_product(m, i, j, n, k, l).items():
                    cur = out.get(key, ZERO) + st * c
                    if cur:
                        out[key] = cur
                    elif key in out:
                        del out[key]
        top = max((p for (p, r, s) in out), default=0)
        if top > self.n_max:
            raise LevelOverflow(
                "product needs level %d beyond the window n_max=%d" % (top, self.n_max)
            )
        return CoeffElement(out)

    # -- coalgebra ------------------------------------------------------

    def coproduct(self, f):
        """D t_{ij} = sum_k t_{ik} (x) t_{kj}, as a list of pairs."""
        out = []
        for (n, i, j), s in f.terms.items():
            for k in range(n + 1):
                out.append(
                    (CoeffElement({(n, i, k): s}), CoeffElement({(n, k, j): ONE}))
                )
        return out

    def counit(self, f):
        acc = ZERO
        for (n, i, j), s in f.terms.items():
            if i == j:
                acc = acc + s
        return acc

    def _class_solver(self, n, d):
        """Cached inverse of the square pairing system of block n,
        class d (Vandermonde-like in the k-exponent)."""
        cached = self._class_inv.get((n, d))
        if cached is None:
            pairs = [(max(d, 0) + t, max(-d, 0) + t) for t in range(n - abs(d) + 1)]
            monos = [(max(d, 0), b, max(-d, 0)) for b in range(n - abs(d) + 1)]
            m = Matrix.zeros(len(monos), len(pairs))
            for r, mono in enumerate(monos):
                for c, (i, j) in enumerate(pairs):
                    m.a[r][c] = self._act_entry(n, mono, i, j)
            cached = (pairs, monos, m.inverse())
            self._class_inv[(n, d)] = cached
        return cached

    def _solve_in_class(self, n, d, value_fn):
        """The unique level-n class-d combination of t's with the given
        pairings against the class monomial family."""
        pairs, monos, inv = self._class_solver(n, d)
        vals = [value_fn(mono) for mono in monos]
        coeffs = inv.apply(vals)
        return {(n, i, j): c for (i, j), c in zip(pairs, coeffs) if c}

    def _antipode_block(self, n):
        block = self._antipode_blocks.get(n)
        if block is None:
            block = {}
            mod = repmod.irrep(n)
            for i in range(n + 1):
                for j in range(n + 1):
                    # S(t_{ij})(x) = t_{ij}(S(x)), again of level n and
                    # the same diagonal class
                    def value_fn(mono, i=i, j=j):
                        return mod.act(uea.antipode(uea.monomial(*mono)))[i, j]

                    block[(i, j)] = CoeffElement(self._solve_in_class(n, i - j, value_fn))
            self._antipode_blocks[n] = block
        return block

    def antipode(self, f):
        acc = CoeffElement()
        for (n, i, j), s in f.terms.items():
            acc = acc + self._antipode_block(n)[(i, j)].scale(s)
        return acc

    def _star_block(self, n):
        block = self._star_blocks.get(n)
        if block is None:
            block = {}
            mod = repmod.irrep(n)
            for i in range(n + 1):
                for j in range(n + 1):
                    # f*(x) = conj f((S x)*); conjugation fixes Scalars.
                    # (S mono)* reverses the class, so t_{ij}* lives in
                    # class j - i.
                    def value_fn(mono, i=i, j=j):
                        return mod.act(uea.star(uea.antipode(uea.monomial(*mono))))[i, j].conj()

                    block[(i, j)] = CoeffElement(self._solve_in_class(n, j - i, value_fn))
            self._star_blocks[n] = block
        return block

    def star(self, f):
        acc = CoeffElement()
        for (n, i, j), s in f.terms.items():
            acc = acc + self._star_block(n)[(i, j)].scale(s.conj())
        return acc

    # -- translation actions ---------------------------------------------

    def _to_blocks(self, f):
        blocks = {}
        for (n, i, j), s in f.terms.items():
            blk = blocks.get(n)
            if blk is None:
                blk = blocks[n] = Matrix.zeros(n + 1, n + 1)
            blk.a[i][j] = s
        return blocks

    @staticmethod
    def _from_blocks(blocks):
        terms = {}
        for n, blk in blocks.items():
            for i in range(n + 1):
                for j in range(n + 1):
                    if blk.a[i][j]:
                        terms[(n, i, j)] = blk.a[i][j]
        return CoeffElement(terms)

    def circle(self, x, f):
        """Right translation: x o f = sum f_(1) <f_(2), x>; on blocks the
        coefficient matrix C goes to C pi_n(x)^T."""
        blocks = self._to_blocks(f)
        return self._from_blocks(
            {n: blk * repmod.irrep(n).act(x).transpose() for n, blk in blocks.items()}
        )

    def dot(self, x, f):
        """Left translation: x . f = sum <f_(1), S^{-1}(x)> f_(2); on
        blocks C goes to pi_n(S^{-1} x)^T C."""
        xs = uea.antipode_inv(x)
        blocks = self._to_blocks(f)
        return self._from_blocks(
            {n: repmod.irrep(n).act(xs).transpose() * blk for n, blk in blocks.items()}
        )

    # -- Haar functional -------------------------------------------------

    def haar(self, f):
        """The normalized invariant functional: the level-0 coefficient."""
        return f.terms.get((0, 0, 0), ZERO)

    def haar_norm_sq(self, f):
        return self.haar(self.multiply(self.star(f), f))
