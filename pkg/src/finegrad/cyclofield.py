"""Exact arithmetic in cyclotomic fields Q(zeta_N).

An element is stored as its coefficient vector in the power basis
1, z, ..., z^(phi(N)-1), with trailing zeros stripped so that zero is the
empty tuple.  Coefficients are gmpy2 ``mpq`` rationals.
"""

from functools import lru_cache
from math import gcd

from gmpy2 import mpq

__all__ = ["Field", "Scalar", "make_field", "root_of_unity", "OrderUnavailable", "cyclotomic_poly"]


class OrderUnavailable(ValueError):
    pass


def _lcm(a, b):
    return a * b // gcd(a, b)


def _polydiv_exact(num, den):
    # integer polynomials, ascending coefficients, den monic
    num = list(num)
    q = [0] * (len(num) - len(den) + 1)
    for i in range(len(q) - 1, -1, -1):
        c = num[i + len(den) - 1]
        q[i] = c
        if c:
            for j, d in enumerate(den):
                num[i + j] -= c * d
    assert not any(num), "inexact division"
    return q


@lru_cache(maxsize=None)
def cyclotomic_poly(n):
    """Integer coefficients (ascending) of the n-th cyclotomic polynomial."""
    p = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            p = _polydiv_exact(p, cyclotomic_poly(d))
    return tuple(p)


class Field:
    """Q(zeta_N).  Use :func:`make_field`; instances are cached per conductor."""

    __slots__ = ("conductor", "modulus", "degree", "_reduce", "zero", "one")

    def __init__(self, conductor):
        self.conductor = conductor
        self.modulus = cyclotomic_poly(conductor)
        deg = self.degree = len(self.modulus) - 1
        # _reduce[k] = coefficients of z^(deg+k) reduced mod Phi_N
        red = []
        cur = [-mpq(c) for c in self.modulus[:deg]]
        for _ in range(deg):
            red.append(tuple(cur))
            top = cur[-1]
            cur = [mpq(0)] + cur[:-1]
            if top:
                for j in range(deg):
                    cur[j] -= top * self.modulus[j]
        self._reduce = tuple(red)
        self.zero = Scalar(self, ())
        self.one = Scalar(self, (mpq(1),))

    def __repr__(self):
        return f"Field(N={self.conductor})"

    def __reduce__(self):
        return (make_field, ([self.conductor],))

    def __call__(self, x):
        """Coerce an int, rational or Scalar into this field."""
        if isinstance(x, Scalar):
            if x.field is self:
                return x
            return self.embed(x)
        q = mpq(x)
        return Scalar(self, (q,) if q else ())

    def from_coeffs(self, coeffs):
        return Scalar(self, _canon(self, [mpq(c) for c in coeffs]))

    def embed(self, x):
        """Map an element of a subfield Q(zeta_M), M | N, into this field."""
        M = x.field.conductor
        if self.conductor % M:
            raise OrderUnavailable(f"Q(zeta_{M}) is not a subfield of Q(zeta_{self.conductor})")
        z = root_of_unity(self, M)
        acc = self.zero
        p = self.one
        for c in x.c:
            if c:
                acc = acc + p * c
            p = p * z
        return acc

    def zeta(self):
        return root_of_unity(self, self.conductor)


def _canon(F, coeffs):
    deg = F.degree
    if len(coeffs) >= 2 * deg:
        # long division by the monic modulus
        coeffs = list(coeffs)
        mod = F.modulus
        for k in range(len(coeffs) - 1, deg - 1, -1):
            c = coeffs[k]
            if c:
                for j in range(deg + 1):
                    coeffs[k - deg + j] -= c * mod[j]
        coeffs = coeffs[:deg]
    if len(coeffs) > deg:
        red = F._reduce
        out = list(coeffs[:deg])
        for k in range(deg, len(coeffs)):
            c = coeffs[k]
            if c:
                for j, r in enumerate(red[k - deg]):
                    if r:
                        out[j] += c * r
        coeffs = out
    n = len(coeffs)
    while n and not coeffs[n - 1]:
        n -= 1
    return tuple(coeffs[:n])


class Scalar:
    __slots__ = ("field", "c")

    def __init__(self, field, c):
        self.field = field
        self.c = c

    def _coerce(self, other):
        if isinstance(other, Scalar):
            if other.field is not self.field:
                raise ValueError(f"field mismatch: {self.field} vs {other.field}")
            return other
        return self.field(other)

    def __add__(self, other):
        o = self._coerce(other).c
        a = self.c
        if not o:
            return self
        if not a:
            return Scalar(self.field, o)
        if len(a) < len(o):
            a, o = o, a
        out = list(a)
        for i, x in enumerate(o):
            out[i] += x
        n = len(out)
        while n and not out[n - 1]:
            n -= 1
        return Scalar(self.field, tuple(out[:n]))

    __radd__ = __add__

    def __neg__(self):
        return Scalar(self.field, tuple(-x for x in self.c))

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) + (-self)

    def __mul__(self, other):
        if not isinstance(other, Scalar):
            q = mpq(other)
            if not q or not self.c:
                return self.field.zero
            return Scalar(self.field, tuple(x * q for x in self.c))
        if other.field is not self.field:
            raise ValueError(f"field mismatch: {self.field} vs {other.field}")
        a, b = self.c, other.c
        if not a or not b:
            return self.field.zero
        if len(a) == 1:
            x = a[0]
            return Scalar(self.field, tuple(x * y for y in b))
        if len(b) == 1:
            y = b[0]
            return Scalar(self.field, tuple(x * y for x in a))
        out = [mpq(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return Scalar(self.field, _canon(self.field, out))

    __rmul__ = __mul__

    def inv(self):
        if not self.c:
            raise ZeroDivisionError("inverse of zero in " + repr(self.field))
        if len(self.c) == 1:
            return Scalar(self.field, (1 / self.c[0],))
        return Scalar(self.field, _canon(self.field, _poly_inverse(list(self.c), self.field.modulus)))

    def __truediv__(self, other):
        return self * self._coerce(other).inv()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inv()

    def __pow__(self, k):
        if k < 0:
            return self.inv() ** (-k)
        result = self.field.one
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.field is other.field and self.c == other.c
        try:
            q = mpq(other)
        except (TypeError, ValueError):
            return NotImplemented
        return self.c == ((q,) if q else ())

    def __hash__(self):
        return hash((self.field.conductor, self.c))

    def __bool__(self):
        return bool(self.c)

    def is_zero(self):
        return not self.c

    def is_rational(self):
        return len(self.c) <= 1

    def to_strings(self):
        """Serialized form: "p/q" strings in ascending power order."""
        return [f"{int(x.numerator)}/{int(x.denominator)}" for x in self.c]

    def __repr__(self):
        if not self.c:
            return "0"
        terms = []
        for i, x in enumerate(self.c):
            if x:
                terms.append(str(x) if i == 0 else f"{x}*z^{i}")
        return " + ".join(terms)


def _poly_inverse(a, modulus):
    # extended Euclid over Q: find u with u*a = 1 mod modulus
    def trim(p):
        while p and not p[-1]:
            p.pop()
        return p

    def divmod_(n, d):
        n = list(n)
        q = [mpq(0)] * max(len(n) - len(d) + 1, 1)
        inv_lead = 1 / d[-1]
        while len(trim(n)) >= len(d):
            c = n[-1] * inv_lead
            k = len(n) - len(d)
            q[k] = c
            for j, x in enumerate(d):
                n[k + j] -= c * x
            n.pop()
        return trim(q), n

    def sub_mul(p, q, r):
        # p - q*r
        out = list(p) + [mpq(0)] * max(0, len(q) + len(r) - 1 - len(p))
        for i, x in enumerate(q):
            for j, y in enumerate(r):
                out[i + j] -= x * y
        return trim(out)

    r0, r1 = [mpq(c) for c in modulus], trim(list(a))
    s0, s1 = [], [mpq(1)]
    while len(r1) > 1:
        q, rem = divmod_(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, sub_mul(s0, q, s1)
    c = r1[0]
    return [x / c for x in s1]


@lru_cache(maxsize=None)
def _field(N):
    return Field(N)


def make_field(n_list):
    """Field Q(zeta_N) with N the lcm of the requested root orders."""
    n_list = list(n_list)
    if not n_list:
        raise ValueError("make_field needs at least one root order")
    N = 1
    for n in n_list:
        if n < 1:
            raise ValueError(f"root order must be positive, got {n}")
        N = _lcm(N, n)
    return _field(N)


def root_of_unity(F, n):
    """The primitive n-th root zeta_N^(N/n); raises OrderUnavailable unless n | N."""
    N = F.conductor
    if n < 1 or N % n:
        raise OrderUnavailable(f"no primitive {n}-th root of unity in Q(zeta_{N})")
    k = N // n
    if F.degree == 1:
        # N in {1, 2}: zeta_N is 1 or -1
        return F(1) if (N == 1 or k % 2 == 0) else F(-1)
    coeffs = [0] * (k + 1)
    coeffs[k] = 1
    return F.from_coeffs(coeffs)
