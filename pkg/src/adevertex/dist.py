"""Formal two-variable distribution calculus on finite mode windows.

Kernels are finite sums c * (z-w)^a (z+w)^b z^p w^q with integer exponents
(a, b possibly negative; p, q >= 0).  Each kernel has two Laurent expansions:
iota_zw (geometric/binomial series valid for |z| > |w|) and iota_wz; their
difference is supported on delta-function diagonals.  A window holds the
exact coefficients of z^{-m} w^{-k} for |m| <= M_z, |k| <= M_w and claims
nothing outside.
"""

from gmpy2 import mpq

from .scalar import Scalar, ZERO, ONE


def binom(a, t):
    """Generalized binomial coefficient C(a, t) for integer a, t >= 0."""
    num = mpq(1)
    for s in range(t):
        num *= mpq(a - s, s + 1)
    return num


class Kernel:
    """Sum of terms coeff * (z-w)^a (z+w)^b z^p w^q, canonically ordered."""

    __slots__ = ("parts",)

    def __init__(self, parts):
        merged = {}
        for coeff, a, b, p, q in parts:
            key = (a, b, p, q)
            merged[key] = merged.get(key, ZERO) + coeff
        self.parts = tuple((c, *k) for k, c in sorted(merged.items()) if c)

    @staticmethod
    def term(coeff, a=0, b=0, p=0, q=0):
        if isinstance(coeff, int):
            coeff = Scalar(coeff)
        if p < 0 or q < 0:
            raise ValueError("monomial exponents p, q must be non-negative")
        return Kernel([(coeff, a, b, p, q)])

    def __add__(self, other):
        return Kernel(self.parts + other.parts)

    def __sub__(self, other):
        return self + other * Scalar(-1)

    def __mul__(self, scalar):
        return Kernel([(c * scalar, a, b, p, q)
                       for c, a, b, p, q in self.parts])

    def __repr__(self):
        def one(c, a, b, p, q):
            return f"({c})*(z-w)^{a}*(z+w)^{b}*z^{p}*w^{q}"
        return " + ".join(one(*t) for t in self.parts) or "0"


class BiSeriesWindow:
    """Exact coefficients c[m, k] of z^{-m} w^{-k} within |m|,|k| bounds."""

    __slots__ = ("mz", "mw", "table")

    def __init__(self, mz, mw, table=None):
        self.mz = mz
        self.mw = mw
        self.table = dict(table) if table else {}

    def get(self, m, k):
        if abs(m) > self.mz or abs(k) > self.mw:
            raise KeyError(f"({m},{k}) outside window {self.mz},{self.mw}")
        return self.table.get((m, k), ZERO)

    def add_at(self, m, k, coeff):
        if abs(m) <= self.mz and abs(k) <= self.mw and coeff:
            s = self.table.get((m, k), ZERO) + coeff
            if s:
                self.table[(m, k)] = s
            else:
                del self.table[(m, k)]

    def row(self, m):
        """Nonzero (k, coeff) entries of row m."""
        return [(k, c) for (mm, k), c in self.table.items() if mm == m]

    def __eq__(self, other):
        return (self.mz, self.mw) == (other.mz, other.mw) \
            and self.table == other.table

    def __sub__(self, other):
        out = BiSeriesWindow(min(self.mz, other.mz), min(self.mw, other.mw))
        for m in range(-out.mz, out.mz + 1):
            for k in range(-out.mw, out.mw + 1):
                out.add_at(m, k, self.get(m, k) - other.get(m, k))
        return out

    def is_zero(self):
        return not self.table

    def tsv(self):
        lines = []
        for m in range(-self.mz, self.mz + 1):
            lines.append("\t".join(
                str(self.table.get((m, k), ZERO))
                for k in range(-self.mw, self.mw + 1)))
        return "\n".join(lines)


def iota_expand(kernel, region, mz, mw):
    """Laurent expansion of the kernel in the region "zw" (|z| > |w|) or
    "wz" (|w| > |z|), restricted to the window."""
    if region not in ("zw", "wz"):
        raise ValueError("region must be 'zw' or 'wz'")
    out = BiSeriesWindow(mz, mw)
    for coeff, a, b, p, q in kernel.parts:
        if region == "zw":
            # expansions in powers of w: exact w-exponent t1 + t2 + q
            tmax = mw - q
            for t1 in range(max(tmax, 0) + 1):
                c1 = coeff * Scalar(binom(a, t1) * (-1) ** t1)
                if not c1:
                    continue
                for t2 in range(max(tmax, 0) + 1 - t1):
                    c = c1 * Scalar(binom(b, t2))
                    out.add_at(-(a - t1 + b - t2 + p), -(t1 + t2 + q), c)
        else:
            tmax = mz - p
            for t1 in range(max(tmax, 0) + 1):
                c1 = coeff * Scalar(binom(a, t1) * (-1) ** ((a + t1) % 2))
                if not c1:
                    continue
                for t2 in range(max(tmax, 0) + 1 - t1):
                    c = c1 * Scalar(binom(b, t2))
                    out.add_at(-(t1 + t2 + p), -(a - t1 + b - t2 + q), c)
    return out


def iota_diff(kernel, mz, mw):
    """(iota_zw - iota_wz) applied to the kernel, on the window."""
    zw = iota_expand(kernel, "zw", mz, mw)
    wz = iota_expand(kernel, "wz", mz, mw)
    return zw - wz


def odd_delta(mz, mw):
    """Sum over odd r of z^{-r-1} w^r: 1 at (m, k) = (r+1, -r), r odd."""
    out = BiSeriesWindow(mz, mw)
    for r in range(-mw - 1, mw + 2):
        if r % 2:
            out.add_at(r + 1, -r, ONE)
    return out


# Kernels used by the commutator right-hand sides.
K_W_OVER_ZPW = Kernel.term(1, a=0, b=-1, p=0, q=1)        # w/(z+w)
K_W2_OVER_ZPW2 = Kernel.term(1, a=0, b=-2, p=0, q=2)      # w^2/(z+w)^2
K_W2_OVER_ZPW = Kernel.term(1, a=0, b=-1, p=0, q=2)       # w^2/(z+w)
K_W_OVER_ZMW = Kernel.term(1, a=-1, b=0, p=0, q=1)        # w/(z-w)
