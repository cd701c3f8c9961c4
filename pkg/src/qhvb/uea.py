"""The Hopf algebra U_q(sl2) in PBW normal form.

Generators are f, k^{+-1}, e subject to

    k e k^{-1} = q e,   k f k^{-1} = q^{-1} f,
    e f - f e  = (k^2 - k^{-2}) / (q - q^{-1}),

with q = u^4.  Elements are stored as maps from PBW monomials
f^a k^b e^c -- encoded as integer triples (a, b, c) with a, c >= 0 and
b in Z -- to Scalar coefficients; rewriting always lands in this normal
form.

The Hopf structure uses the k-balanced coproduct

    D(k) = k (x) k,
    D(e) = e (x) k + k^{-1} (x) e,
    D(f) = f (x) k + k^{-1} (x) f,

the counit eps(e) = eps(f) = 0, eps(k) = 1, and the antipode determined
by the Hopf axiom: S(k) = k^{-1}, S(e) = -q e, S(f) = -q^{-1} f.  The
star structure is e* = f, f* = e, k* = k, which is a Hopf *-structure
for this coproduct without any flip.

This is one of several equivalent normalizations in use; it is fixed
here once and all downstream matrix coefficients inherit it.
"""

from .scalars import Scalar, ZERO, ONE, qint

_QPOW = Scalar.q_power

# q - q^{-1}, the denominator of the e/f commutator
_QDIFF = _QPOW(1) - _QPOW(-1)


# ----------------------------------------------------------------------
# core rewriting: normal form of e^c f^a

_EF_MEMO = {}


def _ef_normal(c, a):
    """PBW normal form of e^c f^a as a dict {(a', b', c'): Scalar}.

    Uses e f^a = f^a e + [a] f^{a-1} (q^{-(a-1)} k^2 - q^{a-1} k^{-2}) / (q - q^{-1})
    recursively (reduce one e at a time)."""
    if c == 0 or a == 0:
        return {(a, 0, c): ONE}
    key = (c, a)
    memo = _EF_MEMO.get(key)
    if memo is not None:
        return memo
    out = {}
    # e^{c-1} f^a, then append one e on the right
    for (x, y, z), s in _ef_normal(c - 1, a).items():
        _accum(out, (x, y, z + 1), s)
    # [a] e^{c-1} f^{a-1} * (q^{-(a-1)} k^2 - q^{a-1} k^{-2}) / (q-q^{-1})
    co = qint(a) / _QDIFF
    for (x, y, z), s in _ef_normal(c - 1, a - 1).items():
        base = s * co
        # right-multiplying f^x k^y e^z by k^s picks up q^{-z*s}
        _accum(out, (x, y + 2, z), base * _QPOW(-(a - 1)) * _QPOW(-2 * z))
        _accum(out, (x, y - 2, z), -base * _QPOW(a - 1) * _QPOW(2 * z))
    out = {m: s for m, s in out.items() if s}
    _EF_MEMO[key] = out
    return out


def _accum(d, key, s):
    if not s:
        return
    cur = d.get(key)
    if cur is None:
        d[key] = s
    else:
        cur = cur + s
        if cur:
            d[key] = cur
        else:
            del d[key]


def _mono_mul(m1, m2):
    """Product of two PBW monomials as a dict of monomials."""
    a1, b1, c1 = m1
    a2, b2, c2 = m2
    out = {}
    for (x, y, z), s in _ef_normal(c1, a2).items():
        # f^{a1} k^{b1} (f^x k^y e^z) k^{b2} e^{c2}
        coeff = s * _QPOW(-b1 * x - z * b2)
        _accum(out, (a1 + x, b1 + y + b2, z + c2), coeff)
    return out


# ----------------------------------------------------------------------
# elements


class UEAElement:
    """A finite Scalar-linear combination of PBW monomials f^a k^b e^c."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {m: s for m, s in (terms or {}).items() if s}

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other):
        out = dict(self.terms)
        for m, s in other.terms.items():
            _accum(out, m, s)
        return UEAElement(out)

    def __sub__(self, other):
        out = dict(self.terms)
        for m, s in other.terms.items():
            _accum(out, m, -s)
        return UEAElement(out)

    def __neg__(self):
        return UEAElement({m: -s for m, s in self.terms.items()})

    def scale(self, s):
        if isinstance(s, int):
            s = Scalar(s)
        if not s:
            return UEAElement()
        return UEAElement({m: s * t for m, t in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (Scalar, int)):
            return self.scale(other)
        out = {}
        for m1, s1 in self.terms.items():
            for m2, s2 in other.terms.items():
                s12 = s1 * s2
                for m, s in _mono_mul(m1, m2).items():
                    _accum(out, m, s12 * s)
        return UEAElement(out)

    __rmul__ = scale

    def __pow__(self, n):
        assert n >= 0
        acc = UNIT
        for _ in range(n):
            acc = acc * self
        return acc

    def __eq__(self, other):
        return isinstance(other, UEAElement) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def coefficient(self, mono):
        return self.terms.get(mono, ZERO)

    def __str__(self):
        return format_element(self)

    __repr__ = __str__


def monomial(a, b, c, coeff=ONE):
    assert a >= 0 and c >= 0
    return UEAElement({(a, b, c): coeff})


UNIT = monomial(0, 0, 0)
E = monomial(0, 0, 1)
F = monomial(1, 0, 0)
K = monomial(0, 1, 0)
K_INV = monomial(0, -1, 0)


def zero():
    return UEAElement()


def multiply(x, y):
    """PBW-normal product (the algebra structure)."""
    return x * y


def counit(x):
    acc = ZERO
    for (a, b, c), s in x.terms.items():
        if a == 0 and c == 0:
            acc = acc + s
    return acc


# ----------------------------------------------------------------------
# tensor square (for the coproduct)


class TensorUEA:
    """An element of U_q (x) U_q: a map from pairs of PBW monomials to
    Scalars -- the fully expanded canonical form, so equality of
    coproducts is a dict comparison."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {m: s for m, s in (terms or {}).items() if s}

    def __add__(self, other):
        out = dict(self.terms)
        for m, s in other.terms.items():
            _accum(out, m, s)
        return TensorUEA(out)

    def __sub__(self, other):
        out = dict(self.terms)
        for m, s in other.terms.items():
            _accum(out, m, -s)
        return TensorUEA(out)

    def scale(self, s):
        if not s:
            return TensorUEA()
        return TensorUEA({m: s * t for m, t in self.terms.items()})

    def __mul__(self, other):
        out = {}
        for (l1, r1), s1 in self.terms.items():
            for (l2, r2), s2 in other.terms.items():
                s12 = s1 * s2
                left = _mono_mul(l1, l2)
                right = _mono_mul(r1, r2)
                for ml, sl in left.items():
                    for mr, sr in right.items():
                        _accum(out, (ml, mr), s12 * sl * sr)
        return TensorUEA(out)

    def __eq__(self, other):
        return isinstance(other, TensorUEA) and self.terms == other.terms

    def flip(self):
        return TensorUEA({(r, l): s for (l, r), s in self.terms.items()})

    def map_legs(self, left_fn=None, right_fn=None):
        """Apply linear maps (UEAElement -> UEAElement) to the legs."""
        out = {}
        for (l, r), s in self.terms.items():
            lx = left_fn(UEAElement({l: ONE})) if left_fn else UEAElement({l: ONE})
            rx = right_fn(UEAElement({r: ONE})) if right_fn else UEAElement({r: ONE})
            for ml, sl in lx.terms.items():
                for mr, sr in rx.terms.items():
                    _accum(out, (ml, mr), s * sl * sr)
        return TensorUEA(out)

    def contract(self):
        """Multiply the two legs together (the map M: x (x) y -> xy)."""
        acc = UEAElement()
        for (l, r), s in self.terms.items():
            acc = acc + (UEAElement({l: ONE}) * UEAElement({r: ONE})).scale(s)
        return acc

    def pairs(self):
        """The element as a list of (left UEAElement, right monomial
        UEAElement) pairs, grouped by left monomial."""
        grouped = {}
        for (l, r), s in self.terms.items():
            grouped.setdefault(l, {})[r] = s
        return [(UEAElement({l: ONE}), UEAElement(rs)) for l, rs in grouped.items()]

    def __str__(self):
        if not self.terms:
            return "0"
        bits = []
        for (l, r), s in sorted(self.terms.items()):
            bits.append("(%s) %s (x) %s" % (s, _mono_str(l), _mono_str(r)))
        return " + ".join(bits)

    __repr__ = __str__


def tensor(x, y):
    """Simple tensor of two elements."""
    out = {}
    for m1, s1 in x.terms.items():
        for m2, s2 in y.terms.items():
            _accum(out, (m1, m2), s1 * s2)
    return TensorUEA(out)


_DELTA_E_POW = {0: TensorUEA({((0, 0, 0), (0, 0, 0)): ONE})}
_DELTA_F_POW = {0: TensorUEA({((0, 0, 0), (0, 0, 0)): ONE})}
_DELTA_E = TensorUEA({((0, 0, 1), (0, 1, 0)): ONE, ((0, -1, 0), (0, 0, 1)): ONE})
_DELTA_F = TensorUEA({((1, 0, 0), (0, 1, 0)): ONE, ((0, -1, 0), (1, 0, 0)): ONE})
_DELTA_MONO = {}


def _delta_mono(m):
    cached = _DELTA_MONO.get(m)
    if cached is not None:
        return cached
    a, b, c = m
    if a not in _DELTA_F_POW:
        _DELTA_F_POW[a] = _delta_power(_DELTA_F_POW, _DELTA_F, a)
    if c not in _DELTA_E_POW:
        _DELTA_E_POW[c] = _delta_power(_DELTA_E_POW, _DELTA_E, c)
    kk = TensorUEA({((0, b, 0), (0, b, 0)): ONE})
    out = _DELTA_F_POW[a] * kk * _DELTA_E_POW[c]
    _DELTA_MONO[m] = out
    return out


def _delta_power(memo, base, n):
    top = max(i for i in memo if i <= n)
    acc = memo[top]
    for i in range(top + 1, n + 1):
        acc = acc * base
        memo[i] = acc
    return memo[n]


def coproduct(x):
    acc = TensorUEA()
    for m, s in x.terms.items():
        acc = acc + _delta_mono(m).scale(s)
    return acc


def iterated_coproduct(x, legs):
    """The (legs-1)-fold coproduct as a dict mapping tuples of PBW
    monomials to Scalars; legs = 1 returns x itself in this shape.
    Coassociativity makes the expansion order immaterial."""
    assert legs >= 1
    cur = {(m,): s for m, s in x.terms.items()}
    for _ in range(legs - 1):
        nxt = {}
        for key, s in cur.items():
            for (m1, m2), s2 in _delta_mono(key[-1]).terms.items():
                k2 = key[:-1] + (m1, m2)
                v = nxt.get(k2, ZERO) + s * s2
                if v:
                    nxt[k2] = v
                elif k2 in nxt:
                    del nxt[k2]
        cur = nxt
    return cur


# ----------------------------------------------------------------------
# antipode and star

_ANTIPODE_MEMO = {}
_ANTIPODE_INV_MEMO = {}


def _antipode_mono(m, inverse=False):
    memo = _ANTIPODE_INV_MEMO if inverse else _ANTIPODE_MEMO
    cached = memo.get(m)
    if cached is not None:
        return cached
    a, b, c = m
    # S is an anti-homomorphism: S(f^a k^b e^c) = S(e)^c S(k)^b S(f)^a
    # with S(e) = -q e, S(f) = -q^{-1} f (S^{-1}: -q^{-1} e, -q f).
    sgn = _QPOW(c - a) if not inverse else _QPOW(a - c)
    if (a + c) % 2:
        sgn = -sgn
    out = (monomial(0, 0, c) * monomial(0, -b, 0) * monomial(a, 0, 0)).scale(sgn)
    memo[m] = out
    return out


def antipode(x):
    acc = UEAElement()
    for m, s in x.terms.items():
        acc = acc + _antipode_mono(m).scale(s)
    return acc


def antipode_inv(x):
    acc = UEAElement()
    for m, s in x.terms.items():
        acc = acc + _antipode_mono(m, inverse=True).scale(s)
    return acc


def star(x):
    """The compact real form: e* = f, f* = e, k* = k, extended as an
    anti-involution; on PBW monomials (f^a k^b e^c)* = f^c k^b e^a."""
    return UEAElement({(c, b, a): s.conj() for (a, b, c), s in x.terms.items()})


# ----------------------------------------------------------------------
# serialization


def _mono_str(m):
    a, b, c = m
    if a == b == c == 0:
        return "1"
    bits = []
    if a:
        bits.append("f" if a == 1 else "f^%d" % a)
    if b:
        bits.append("k" if b == 1 else "k^%d" % b)
    if c:
        bits.append("e" if c == 1 else "e^%d" % c)
    return " ".join(bits)


def format_element(x):
    """Canonical text form: Scalar-coefficient terms in sorted PBW order."""
    if not x.terms:
        return "0"
    bits = []
    for m in sorted(x.terms):
        s = x.terms[m]
        txt = str(s)
        if txt == "1" and m != (0, 0, 0):
            bits.append(_mono_str(m))
        elif m == (0, 0, 0):
            bits.append(txt if ("/" not in txt and "+" not in txt and "-" not in txt[1:]) else "(%s)" % txt)
        else:
            if "/" in txt or "+" in txt or "-" in txt[1:] or " " in txt:
                txt = "(%s)" % txt
            bits.append("%s %s" % (txt, _mono_str(m)))
    return " + ".join(bits)


def pbw_monomials(max_degree, k_range=None):
    """All PBW monomials (a, b, c) with a + |b| + c <= max_degree (the
    default) or with a, c <= max_degree and b in k_range if given."""
    out = []
    if k_range is None:
        for a in range(max_degree + 1):
            for c in range(max_degree + 1 - a):
                for b in range(-(max_degree - a - c), max_degree - a - c + 1):
                    out.append((a, b, c))
    else:
        for a in range(max_degree + 1):
            for c in range(max_degree + 1):
                for b in k_range:
                    out.append((a, b, c))
    return sorted(out)
