"""Exact arithmetic in real quadratic fields.

Elements are stored as (s + t*sqrt(d))/r with integer s, t, positive r,
and d a squarefree positive nonsquare.  All comparisons are decided by
exact integer sign tests; no floating point enters the certified path.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt


class QFieldError(ValueError):
    pass


def squarefree_decompose(n: int) -> tuple[int, int]:
    """Write n = t*t*d with d squarefree.  Returns (t, d).  Requires n > 0."""
    if n <= 0:
        raise QFieldError("positive integer required")
    t, d = 1, 1
    f = 2
    m = n
    while f * f <= m:
        if m % f == 0:
            e = 0
            while m % f == 0:
                m //= f
                e += 1
            t *= f ** (e // 2)
            if e % 2:
                d *= f
        f += 1 if f == 2 else 2
    d *= m
    return t, d


@dataclass(frozen=True)
class QuadExt:
    """(s + t*sqrt(d))/r in canonical form: gcd(s,t,r)=1, r>0, d squarefree."""

    s: int
    t: int
    r: int
    d: int

    @staticmethod
    def make(s: int, t: int, r: int, d: int) -> "QuadExt":
        if r == 0:
            raise QFieldError("zero denominator")
        if d <= 1 or isqrt(d) ** 2 == d:
            raise QFieldError("d must be a positive nonsquare")
        td, dd = squarefree_decompose(d)
        if dd != d:
            t, d = t * td, dd
        if r < 0:
            s, t, r = -s, -t, -r
        g = gcd(gcd(s, t), r)
        return QuadExt(s // g, t // g, r // g, d)

    @staticmethod
    def rational(num: int, den: int, d: int) -> "QuadExt":
        return QuadExt.make(num, 0, den, d)

    @staticmethod
    def integer(n: int, d: int) -> "QuadExt":
        return QuadExt.make(n, 0, 1, d)

    def _coerce(self, other) -> "QuadExt":
        if isinstance(other, int):
            return QuadExt.integer(other, self.d)
        if not isinstance(other, QuadExt):
            raise TypeError(f"cannot combine QuadExt with {type(other).__name__}")
        if other.d != self.d and other.t != 0 and self.t != 0:
            raise QFieldError(f"mixed radicands {self.d} and {other.d}")
        return other

    def _common_d(self, other: "QuadExt") -> int:
        return self.d if self.t != 0 or other.t == 0 else other.d

    def __add__(self, other) -> "QuadExt":
        o = self._coerce(other)
        d = self._common_d(o)
        return QuadExt.make(self.s * o.r + o.s * self.r,
                            self.t * o.r + o.t * self.r,
                            self.r * o.r, d)

    __radd__ = __add__

    def __neg__(self) -> "QuadExt":
        return QuadExt(-self.s, -self.t, self.r, self.d)

    def __sub__(self, other) -> "QuadExt":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "QuadExt":
        return (-self) + other

    def __mul__(self, other) -> "QuadExt":
        o = self._coerce(other)
        d = self._common_d(o)
        return QuadExt.make(self.s * o.s + self.t * o.t * d,
                            self.s * o.t + self.t * o.s,
                            self.r * o.r, d)

    __rmul__ = __mul__

    def inverse(self) -> "QuadExt":
        # 1/((s+t*sqrt(d))/r) = r*(s-t*sqrt(d))/(s^2-t^2 d)
        norm = self.s * self.s - self.t * self.t * self.d
        if norm == 0 and self.s == 0 and self.t == 0:
            raise ZeroDivisionError("inverse of zero")
        return QuadExt.make(self.r * self.s, -self.r * self.t, norm, self.d)

    def __truediv__(self, other) -> "QuadExt":
        o = self._coerce(other)
        return self * o.inverse()

    def __rtruediv__(self, other) -> "QuadExt":
        return self.inverse() * other

    def is_zero(self) -> bool:
        return self.s == 0 and self.t == 0

    def is_rational(self) -> bool:
        return self.t == 0

    def sign(self) -> int:
        """Exact sign of s + t*sqrt(d) (r > 0 does not affect it)."""
        s, t, d = self.s, self.t, self.d
        if t == 0:
            return (s > 0) - (s < 0)
        if s == 0:
            return 1 if t > 0 else -1
        if s > 0 and t > 0:
            return 1
        if s < 0 and t < 0:
            return -1
        # opposite signs: compare s^2 against t^2 d
        if s * s > t * t * d:
            return 1 if s > 0 else -1
        return 1 if t > 0 else -1

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __ge__(self, other):
        return (self - other).sign() >= 0

    def floor(self) -> int:
        """Exact floor, via an isqrt estimate corrected by sign tests."""
        if self.t == 0:
            return self.s // self.r
        root = isqrt(self.t * self.t * self.d)  # |t|*sqrt(d) rounded down
        approx = root if self.t > 0 else -(root + 1)
        n = (self.s + approx) // self.r
        while (self - (n + 1)).sign() >= 0:
            n += 1
        while (self - n).sign() < 0:
            n -= 1
        return n

    def __float__(self) -> float:
        return (self.s + self.t * self.d ** 0.5) / self.r

    def __repr__(self) -> str:
        return f"({self.s}+{self.t}*sqrt({self.d}))/{self.r}"


def sign(x: QuadExt) -> int:
    return x.sign()


def tau_from_a(a: int) -> QuadExt:
    """Positive fixed point of the periodic continued fraction [a; 1, a, 1, ...].

    It is the positive root of t^2 = a*t + a, namely (a + sqrt(a^2+4a))/2,
    and satisfies tau > a.
    """
    if a <= 0:
        raise QFieldError("a must be a positive integer")
    disc = a * a + 4 * a
    t, d = squarefree_decompose(disc)
    tau = QuadExt.make(a, t, 2, d)
    assert (tau * tau - a * tau - a).is_zero()
    return tau


@dataclass(frozen=True)
class Convergent:
    """Continued-fraction convergent f/g with its index."""

    f: int
    g: int
    index: int


def partial_quotients(x: QuadExt, count: int):
    """First `count` partial quotients of x by exact floor-and-invert."""
    out = []
    for _ in range(count):
        a = x.floor()
        out.append(a)
        x = (x - a).inverse()
    return out


def convergents(x: QuadExt, count: int) -> list[Convergent]:
    """First `count` convergents of an irrational x > 0."""
    if x.t == 0:
        raise QFieldError("convergents require an irrational input")
    if x.sign() <= 0:
        raise QFieldError("convergents require x > 0")
    if count <= 0:
        raise QFieldError("count must be positive")
    out = []
    f_prev, g_prev = 1, 0
    f_pprev, g_pprev = 0, 1
    for k, a in enumerate(partial_quotients(x, count)):
        f, g = a * f_prev + f_pprev, a * g_prev + g_pprev
        out.append(Convergent(f, g, k))
        f_pprev, g_pprev = f_prev, g_prev
        f_prev, g_prev = f, g
    return out
