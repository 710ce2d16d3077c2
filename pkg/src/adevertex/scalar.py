"""Exact arithmetic in the field Q(i, sqrt(2)).

Every coefficient in the engine lives in the 4-dimensional Q-vector space
with basis {1, i, r2, i*r2} where r2 = sqrt(2).  Components are exact
rationals (gmpy2.mpq), so equality of scalars is decidable and canonical.
"""

from gmpy2 import mpq

_ZERO = mpq(0)
_ONE = mpq(1)


class Scalar:
    """a + b*i + c*r2 + d*i*r2 with rational a, b, c, d."""

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a=0, b=0, c=0, d=0):
        self.a = mpq(a)
        self.b = mpq(b)
        self.c = mpq(c)
        self.d = mpq(d)

    @staticmethod
    def rational(p, q=1):
        return Scalar(mpq(p, q))

    def __bool__(self):
        return bool(self.a or self.b or self.c or self.d)

    def is_zero(self):
        return not self

    def is_rational(self):
        return not (self.b or self.c or self.d)

    def rational_value(self):
        """The value as an mpq; raises if the scalar is irrational or complex."""
        if not self.is_rational():
            raise ValueError(f"not rational: {self}")
        return self.a

    def __eq__(self, other):
        if isinstance(other, int):
            other = Scalar(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        return (self.a == other.a and self.b == other.b
                and self.c == other.c and self.d == other.d)

    def __hash__(self):
        return hash((self.a, self.b, self.c, self.d))

    def __add__(self, other):
        if isinstance(other, int):
            other = Scalar(other)
        return Scalar(self.a + other.a, self.b + other.b,
                      self.c + other.c, self.d + other.d)

    __radd__ = __add__

    def __neg__(self):
        return Scalar(-self.a, -self.b, -self.c, -self.d)

    def __sub__(self, other):
        if isinstance(other, int):
            other = Scalar(other)
        return Scalar(self.a - other.a, self.b - other.b,
                      self.c - other.c, self.d - other.d)

    def __rsub__(self, other):
        return Scalar(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, type(_ONE))):
            return Scalar(self.a * other, self.b * other,
                          self.c * other, self.d * other)
        a1, b1, c1, d1 = self.a, self.b, self.c, self.d
        a2, b2, c2, d2 = other.a, other.b, other.c, other.d
        # i^2 = -1, r2^2 = 2, (i*r2)^2 = -2
        return Scalar(
            a1 * a2 - b1 * b2 + 2 * (c1 * c2 - d1 * d2),
            a1 * b2 + b1 * a2 + 2 * (c1 * d2 + d1 * c2),
            a1 * c2 + c1 * a2 - b1 * d2 - d1 * b2,
            a1 * d2 + d1 * a2 + b1 * c2 + c1 * b2,
        )

    __rmul__ = __mul__

    def conj_i(self):
        """Galois conjugate i -> -i."""
        return Scalar(self.a, -self.b, self.c, -self.d)

    def conj_r2(self):
        """Galois conjugate r2 -> -r2."""
        return Scalar(self.a, self.b, -self.c, -self.d)

    def inv(self):
        if not self:
            raise ZeroDivisionError("inverse of zero scalar")
        # x * conj_i(x) lies in Q(r2); multiply by its r2-conjugate to land in Q.
        y = self * self.conj_i()
        norm = y.a * y.a - 2 * y.c * y.c
        num = self.conj_i() * y.conj_r2()
        ninv = 1 / norm
        return Scalar(num.a * ninv, num.b * ninv, num.c * ninv, num.d * ninv)

    def __truediv__(self, other):
        if isinstance(other, int):
            other = Scalar(other)
        return self * other.inv()

    def __rtruediv__(self, other):
        return Scalar(other) * self.inv()

    def __pow__(self, k):
        if k < 0:
            return self.inv() ** (-k)
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __repr__(self):
        return f"Scalar({self})"

    def __str__(self):
        return render(self)


def _fmt_q(q):
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def render(x):
    """Canonical text form "a + b*i + c*r2 + d*i*r2", dropping zero parts."""
    parts = []
    for comp, unit in ((x.a, ""), (x.b, "i"), (x.c, "r2"), (x.d, "i*r2")):
        if not comp:
            continue
        body = _fmt_q(abs(comp))
        if unit:
            body = unit if body == "1" else f"{body}*{unit}"
        if not parts:
            parts.append(body if comp > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if comp > 0 else f"- {body}")
    return " ".join(parts) if parts else "0"


ZERO = Scalar(0)
ONE = Scalar(1)
I = Scalar(0, 1)
R2 = Scalar(0, 0, 1)
IR2 = Scalar(0, 0, 0, 1)
HALF = Scalar(mpq(1, 2))


def sqrt2_pow(k):
    """(sqrt 2)^k for any integer k, exact."""
    if k >= 0:
        return Scalar(2 ** (k // 2)) * (R2 if k % 2 else ONE)
    return Scalar(mpq(1, 2 ** ((-k + 1) // 2))) * (R2 if k % 2 else ONE)
