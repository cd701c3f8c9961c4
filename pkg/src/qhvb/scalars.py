"""Exact arithmetic in Q(u) and exact linear algebra over it.

The deformation parameter is q = u^4 (so v = q^{1/2} = u^2 is also a
monomial).  Working over the rational function field in u keeps every
exponent that shows up downstream -- half-integer powers of q from weight
pairings, the Cartan factor of the R-matrix on integral weights -- an
integer power of u.

A Scalar is a reduced fraction of integer-coefficient polynomials in u.
Polynomials are plain tuples of ints (index = degree, no trailing zeros,
() is the zero polynomial); reduction divides out the full Z[u] gcd and
fixes the sign of the denominator's leading coefficient, so equal field
elements have equal representations and ``==``/``hash`` are structural.

There is no floating point anywhere; specialization at a rational point
goes through fractions.Fraction.
"""

from fractions import Fraction
from math import gcd as _igcd


class PoleError(ArithmeticError):
    """Raised when a Scalar is specialized at a zero of its denominator."""


class NoSolution(Exception):
    """Raised when an exact linear system has no solution."""


# ----------------------------------------------------------------------
# integer-coefficient polynomials as tuples


def _ptrim(c):
    n = len(c)
    while n and c[n - 1] == 0:
        n -= 1
    return tuple(c[:n])


def _padd(a, b):
    if len(a) < len(b):
        a, b = b, a
    c = list(a)
    for i, x in enumerate(b):
        c[i] += x
    return _ptrim(c)


def _pneg(a):
    return tuple(-x for x in a)


def _psub(a, b):
    return _padd(a, _pneg(b))


def _pmul(a, b):
    if not a or not b:
        return ()
    c = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    c[i + j] += x * y
    return _ptrim(c)


def _pscale(a, k):
    if k == 0:
        return ()
    return tuple(x * k for x in a)


def _pcontent(a):
    g = 0
    for x in a:
        g = _igcd(g, abs(x))
        if g == 1:
            return 1
    return g


def _pdiv_int(a, k):
    # exact division of all coefficients by the integer k
    return tuple(x // k for x in a)


def _pdivmod(a, b):
    """Exact-arithmetic division: returns (quot, rem) with fraction-free
    validity only when b divides into a exactly at each step; used only
    where exactness is guaranteed (division by a gcd, deflation)."""
    assert b, "division by zero polynomial"
    q = [0] * max(len(a) - len(b) + 1, 0)
    r = list(a)
    db, lb = len(b) - 1, b[-1]
    while len(r) >= len(b) and any(r):
        r = list(_ptrim(r))
        if len(r) < len(b):
            break
        c, e = r[-1], len(r) - 1 - db
        if c % lb != 0:
            raise ArithmeticError("inexact polynomial division")
        t = c // lb
        q[e] = t
        for i, x in enumerate(b):
            r[e + i] -= t * x
    return _ptrim(q), _ptrim(r)


def _prem(a, b):
    """Pseudo-remainder of a by b (fraction-free)."""
    db, lb = len(b) - 1, b[-1]
    r = list(a)
    while True:
        r = list(_ptrim(r))
        if len(r) - 1 < db:
            return _ptrim(r)
        lr, e = r[-1], len(r) - 1 - db
        r = [lb * x for x in r]
        for i, x in enumerate(b):
            r[e + i] -= lr * x


def _pprim(a):
    c = _pcontent(a)
    if c in (0, 1):
        return a
    return _pdiv_int(a, c)


def _pgcd(a, b):
    """gcd in Z[u]: content gcd times primitive-PRS gcd, positive leading
    coefficient."""
    if not a:
        g = b
    elif not b:
        g = a
    else:
        ca, cb = _pcontent(a), _pcontent(b)
        a, b = _pprim(a), _pprim(b)
        if len(a) < len(b):
            a, b = b, a
        while b:
            a, b = b, _pprim(_prem(a, b))
        g = _pscale(a, _igcd(ca, cb))
    if g and g[-1] < 0:
        g = _pneg(g)
    return g


def _peval(a, x):
    acc = Fraction(0)
    for c in reversed(a):
        acc = acc * x + c
    return acc


def _pstr(a):
    if not a:
        return "0"
    parts = []
    for e in range(len(a) - 1, -1, -1):
        c = a[e]
        if c == 0:
            continue
        if e == 0:
            t = str(abs(c))
        elif e == 1:
            t = "u" if abs(c) == 1 else "%d*u" % abs(c)
        else:
            t = "u^%d" % e if abs(c) == 1 else "%d*u^%d" % (abs(c), e)
        if not parts:
            parts.append(t if c > 0 else "-" + t)
        else:
            parts.append((" + " if c > 0 else " - ") + t)
    return "".join(parts)


# ----------------------------------------------------------------------
# the field Q(u)


class Scalar:
    """An element of Q(u) in canonical reduced form."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=(1,)):
        num = _ptrim((num,)) if isinstance(num, int) else _ptrim(num)
        den = _ptrim((den,)) if isinstance(den, int) else _ptrim(den)
        if not den:
            raise ZeroDivisionError("zero denominator in Scalar")
        if not num:
            self.num, self.den = (), (1,)
            return
        g = _pgcd(num, den)
        if g != (1,):
            num, _ = _pdivmod(num, g)
            den, _ = _pdivmod(den, g)
        if den[-1] < 0:
            num, den = _pneg(num), _pneg(den)
        self.num, self.den = num, den

    # -- constructors

    @staticmethod
    def from_fraction(fr):
        fr = Fraction(fr)
        return Scalar((fr.numerator,), (fr.denominator,))

    @staticmethod
    def u_power(n):
        """u^n for any integer n."""
        if n >= 0:
            return Scalar((0,) * n + (1,))
        return Scalar((1,), (0,) * (-n) + (1,))

    @staticmethod
    def q_power(n):
        return Scalar.u_power(4 * n)

    @staticmethod
    def v_power(n):
        """v^n with v = q^{1/2} = u^2."""
        return Scalar.u_power(2 * n)

    # -- predicates

    def is_zero(self):
        return not self.num

    def __bool__(self):
        return bool(self.num)

    def is_one(self):
        return self.num == (1,) and self.den == (1,)

    # -- arithmetic

    def __add__(self, other):
        if isinstance(other, int):
            other = Scalar(other)
        if not self.num:
            return other
        if not other.num:
            return self
        if self.den == other.den:
            return Scalar(_padd(self.num, other.num), self.den)
        return Scalar(
            _padd(_pmul(self.num, other.den), _pmul(other.num, self.den)),
            _pmul(self.den, other.den),
        )

    __radd__ = __add__

    def __neg__(self):
        s = Scalar.__new__(Scalar)
        s.num, s.den = _pneg(self.num), self.den
        return s

    def __sub__(self, other):
        if isinstance(other, int):
            other = Scalar(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            other = Scalar(other)
        if not self.num or not other.num:
            return ZERO
        return Scalar(_pmul(self.num, other.num), _pmul(self.den, other.den))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, int):
            other = Scalar(other)
        if not other.num:
            raise ZeroDivisionError("division by zero Scalar")
        if not self.num:
            return ZERO
        return Scalar(_pmul(self.num, other.den), _pmul(self.den, other.num))

    def __rtruediv__(self, other):
        return Scalar(other) / self

    def __pow__(self, n):
        if n == 0:
            return ONE
        base = self if n > 0 else ONE / self
        n = abs(n)
        acc = ONE
        while n:
            if n & 1:
                acc = acc * base
            base = base * base
            n >>= 1
        return acc

    def conj(self):
        """Complex conjugation.  Coefficients are rational and u is kept
        real (q real positive), so conjugation is the identity."""
        return self

    # -- comparison / hashing (canonical forms make these structural)

    def __eq__(self, other):
        if isinstance(other, int):
            other = Scalar(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    # -- specialization

    def eval_at(self, u0):
        u0 = Fraction(u0)
        d = _peval(self.den, u0)
        if d == 0:
            raise PoleError("denominator vanishes at u0 = %s" % u0)
        return _peval(self.num, u0) / d

    def __str__(self):
        if self.den == (1,):
            return _pstr(self.num)
        ns, ds = _pstr(self.num), _pstr(self.den)
        if len(self.num) > 1 or (self.num and self.num[0] < 0):
            ns = "(" + ns + ")"
        if len(self.den) > 1:
            ds = "(" + ds + ")"
        return ns + "/" + ds

    __repr__ = __str__


ZERO = Scalar(0)
ONE = Scalar(1)


def qint(n):
    """The q-integer [n] = (q^n - q^{-n})/(q - q^{-1}), q = u^4."""
    if n < 0:
        return -qint(-n)
    acc = ZERO
    for i in range(n):
        acc = acc + Scalar.q_power(n - 1 - 2 * i)
    return acc


def qfact(n):
    """[n]! = [1][2]...[n]."""
    acc = ONE
    for i in range(2, n + 1):
        acc = acc * qint(i)
    return acc


def eval_at(s, u0):
    """Exact specialization of a Scalar at a rational u0 (PoleError at a
    zero of the denominator)."""
    return s.eval_at(u0)


# ----------------------------------------------------------------------
# dense matrices over Q(u)


class Matrix:
    """A dense matrix of Scalars with exact Gauss-Jordan elimination."""

    __slots__ = ("rows", "cols", "a")

    def __init__(self, entries):
        self.a = [list(row) for row in entries]
        self.rows = len(self.a)
        self.cols = len(self.a[0]) if self.a else 0
        assert all(len(r) == self.cols for r in self.a)

    @staticmethod
    def zeros(r, c):
        return Matrix([[ZERO] * c for _ in range(r)])

    @staticmethod
    def identity(n):
        return Matrix([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    @staticmethod
    def diagonal(vals):
        n = len(vals)
        m = Matrix.zeros(n, n)
        for i, v in enumerate(vals):
            m.a[i][i] = v
        return m

    def __getitem__(self, ij):
        return self.a[ij[0]][ij[1]]

    def copy(self):
        return Matrix(self.a)

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and all(self.a[i][j] == other.a[i][j] for i in range(self.rows) for j in range(self.cols))
        )

    def __add__(self, other):
        assert self.rows == other.rows and self.cols == other.cols
        return Matrix(
            [[self.a[i][j] + other.a[i][j] for j in range(self.cols)] for i in range(self.rows)]
        )

    def __sub__(self, other):
        assert self.rows == other.rows and self.cols == other.cols
        return Matrix(
            [[self.a[i][j] - other.a[i][j] for j in range(self.cols)] for i in range(self.rows)]
        )

    def __neg__(self):
        return Matrix([[-x for x in row] for row in self.a])

    def scale(self, s):
        return Matrix([[s * x for x in row] for row in self.a])

    def __mul__(self, other):
        if isinstance(other, Scalar):
            return self.scale(other)
        assert self.cols == other.rows, "shape mismatch"
        ot = other.a
        out = []
        for i in range(self.rows):
            ai = self.a[i]
            row = []
            for j in range(other.cols):
                acc = ZERO
                for t in range(self.cols):
                    x = ai[t]
                    if x:
                        y = ot[t][j]
                        if y:
                            acc = acc + x * y
                row.append(acc)
            out.append(row)
        return Matrix(out)

    def apply(self, vec):
        """Matrix times column vector (a list of Scalars)."""
        assert self.cols == len(vec)
        out = []
        for i in range(self.rows):
            acc = ZERO
            for t, x in enumerate(self.a[i]):
                if x and vec[t]:
                    acc = acc + x * vec[t]
            out.append(acc)
        return out

    def transpose(self):
        return Matrix([[self.a[i][j] for i in range(self.rows)] for j in range(self.cols)])

    def tensor(self, other):
        """Kronecker product; index (i, k) flattens to i*other.rows + k."""
        out = Matrix.zeros(self.rows * other.rows, self.cols * other.cols)
        for i in range(self.rows):
            for j in range(self.cols):
                x = self.a[i][j]
                if not x:
                    continue
                for k in range(other.rows):
                    for l in range(other.cols):
                        y = other.a[k][l]
                        if y:
                            out.a[i * other.rows + k][j * other.cols + l] = x * y
        return out

    def is_zero(self):
        return all(not x for row in self.a for x in row)

    def rref(self):
        """Reduced row echelon form; returns (R, pivot_columns)."""
        m = [row[:] for row in self.a]
        pivots = []
        r = 0
        for c in range(self.cols):
            pr = None
            for i in range(r, self.rows):
                if m[i][c]:
                    pr = i
                    break
            if pr is None:
                continue
            m[r], m[pr] = m[pr], m[r]
            inv = ONE / m[r][c]
            m[r] = [x * inv for x in m[r]]
            for i in range(self.rows):
                if i != r and m[i][c]:
                    f = m[i][c]
                    m[i] = [a - f * b for a, b in zip(m[i], m[r])]
            pivots.append(c)
            r += 1
            if r == self.rows:
                break
        return Matrix(m), pivots

    def rank(self):
        return len(self.rref()[1])

    def kernel(self):
        """Basis of the right kernel, as a list of column vectors."""
        red, pivots = self.rref()
        pivset = set(pivots)
        free = [c for c in range(self.cols) if c not in pivset]
        basis = []
        for fc in free:
            v = [ZERO] * self.cols
            v[fc] = ONE
            for r, pc in enumerate(pivots):
                v[pc] = -red.a[r][fc]
            basis.append(v)
        return basis

    def solve(self, rhs):
        """Solve self * x = rhs exactly; raises NoSolution if inconsistent.
        rhs may be a vector (list) or a Matrix of right-hand sides; returns
        the same shape.  With a nontrivial kernel the particular solution
        with zero free variables is returned."""
        vec = not isinstance(rhs, Matrix)
        B = Matrix([[x] for x in rhs]) if vec else rhs
        assert B.rows == self.rows
        aug = Matrix([self.a[i] + B.a[i] for i in range(self.rows)])
        red, pivots = aug.rref()
        for r, pc in enumerate(pivots):
            if pc >= self.cols:
                raise NoSolution("inconsistent linear system")
        X = Matrix.zeros(self.cols, B.cols)
        for r, pc in enumerate(pivots):
            for j in range(B.cols):
                X.a[pc][j] = red.a[r][self.cols + j]
        if vec:
            return [X.a[i][0] for i in range(self.cols)]
        return X

    def inverse(self):
        assert self.rows == self.cols
        X = self.solve(Matrix.identity(self.rows))
        if (self * X) != Matrix.identity(self.rows):
            raise NoSolution("matrix is singular")
        return X

    def eval_at(self, u0):
        """Entrywise specialization to Fractions."""
        return [[x.eval_at(u0) for x in row] for row in self.a]

    def __str__(self):
        return "[" + ",\n ".join("[" + ", ".join(str(x) for x in r) + "]" for r in self.a) + "]"

    __repr__ = __str__


def kernel(m):
    return m.kernel()


def solve(m, rhs):
    return m.solve(rhs)


def rank(m):
    return m.rank()


# ----------------------------------------------------------------------
# sparse echelon spans (the workhorse for ideal quotients and span ranks)


class Echelon:
    """An incrementally built reduced echelon basis for a span of sparse
    vectors.  Vectors are dicts mapping hashable, mutually comparable
    column keys to Scalars; the pivot of a row is its smallest key.  Rows
    are kept fully inter-reduced with pivot coefficient 1, so reduction
    against the span is canonical."""

    def __init__(self):
        self.rows = {}  # pivot key -> {key: Scalar}

    @property
    def rank(self):
        return len(self.rows)

    def reduce(self, vec):
        """Canonical representative of vec modulo the span (a new dict)."""
        v = {k: s for k, s in vec.items() if s}
        for key in sorted(v):
            if key not in v:
                continue
            row = self.rows.get(key)
            if row is None:
                continue
            f = v.get(key)
            if not f:
                continue
            for k2, s2 in row.items():
                nv = v.get(k2, ZERO) - f * s2
                if nv:
                    v[k2] = nv
                elif k2 in v:
                    del v[k2]
        return v

    def add(self, vec):
        """Insert vec into the span.  Returns the reduced residual (empty
        dict when vec was already in the span)."""
        v = self.reduce(vec)
        if not v:
            return v
        pivot = min(v)
        inv = ONE / v[pivot]
        row = {k: inv * s for k, s in v.items()}
        for pk, r in self.rows.items():
            f = r.get(pivot)
            if f:
                for k2, s2 in row.items():
                    nv = r.get(k2, ZERO) - f * s2
                    if nv:
                        r[k2] = nv
                    elif k2 in r:
                        del r[k2]
        self.rows[pivot] = row
        return v

    def contains(self, vec):
        return not self.reduce(vec)

    def pivot_keys(self):
        return sorted(self.rows)
