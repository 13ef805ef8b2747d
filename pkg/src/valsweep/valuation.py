"""Monomial valuations in two variables with values in (Z + Z*tau)/N.

A valuation is fixed by positive, rationally independent values on the
two parameters; on a polynomial it takes the minimum over the support,
which is attained at a unique monomial.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Iterator

from .qfield import QuadExt


class ValuationError(ValueError):
    pass


class NotASubgroupError(ValuationError):
    """Raised when the alleged subgroup generators do not lie in the supergroup."""


@dataclass(frozen=True)
class ValueElement:
    """(i + j*tau)/n, an element of the divisible hull of Z + Z*tau."""

    i: int
    j: int
    n: int
    tau: QuadExt

    @staticmethod
    def make(i: int, j: int, n: int, tau: QuadExt) -> "ValueElement":
        if n == 0:
            raise ValuationError("zero denominator")
        if tau.is_rational():
            raise ValuationError("tau must be irrational")
        if n < 0:
            i, j, n = -i, -j, -n
        g = gcd(gcd(i, j), n)
        return ValueElement(i // g, j // g, n // g, tau)

    def as_quadext(self) -> QuadExt:
        t = self.tau
        return QuadExt.make(self.i * t.r + self.j * t.s, self.j * t.t,
                            self.n * t.r, t.d)

    def is_zero(self) -> bool:
        return self.i == 0 and self.j == 0

    def sign(self) -> int:
        return self.as_quadext().sign()

    def coords(self) -> tuple[Fraction, Fraction]:
        """Coordinates with respect to the basis (1, tau)."""
        return Fraction(self.i, self.n), Fraction(self.j, self.n)

    def _check(self, other: "ValueElement") -> None:
        if not isinstance(other, ValueElement):
            raise TypeError("expected a ValueElement")
        if other.tau != self.tau:
            raise ValuationError("mismatched ambient tau")

    def __add__(self, other: "ValueElement") -> "ValueElement":
        self._check(other)
        return ValueElement.make(self.i * other.n + other.i * self.n,
                                 self.j * other.n + other.j * self.n,
                                 self.n * other.n, self.tau)

    def __sub__(self, other: "ValueElement") -> "ValueElement":
        self._check(other)
        return ValueElement.make(self.i * other.n - other.i * self.n,
                                 self.j * other.n - other.j * self.n,
                                 self.n * other.n, self.tau)

    def __neg__(self) -> "ValueElement":
        return ValueElement(-self.i, -self.j, self.n, self.tau)

    def scale(self, k: int) -> "ValueElement":
        return ValueElement.make(self.i * k, self.j * k, self.n, self.tau)

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __ge__(self, other):
        return (self - other).sign() >= 0

    def __float__(self) -> float:
        return (self.i + self.j * float(self.tau)) / self.n

    def __repr__(self) -> str:
        return f"({self.i}+{self.j}*tau)/{self.n}"


Monomial = tuple[int, int]


def check_support(support: Iterable[Monomial]) -> list[Monomial]:
    pairs = list(support)
    if not pairs:
        raise ValuationError("empty support")
    seen = set()
    for e_u, e_v in pairs:
        if e_u < 0 or e_v < 0:
            raise ValuationError(f"negative exponent in support: ({e_u},{e_v})")
        if (e_u, e_v) in seen:
            raise ValuationError(f"duplicate support point ({e_u},{e_v})")
        seen.add((e_u, e_v))
    return pairs


class MonomialValuation:
    """Valuation determined by exact values on the two parameters u, v.

    Rational independence of the two values is checked once here, so the
    minimum over any support is attained at a unique monomial.
    """

    def __init__(self, val_u: ValueElement, val_v: ValueElement):
        val_u._check(val_v)
        if val_u.sign() <= 0 or val_v.sign() <= 0:
            raise ValuationError("parameter values must be positive")
        # (i1,j1)/n1 and (i2,j2)/n2 are Q-dependent iff the integer vectors
        # (i1,j1) and (i2,j2) are parallel.
        if val_u.i * val_v.j - val_u.j * val_v.i == 0:
            raise ValuationError("parameter values are rationally dependent")
        self.val_u = val_u
        self.val_v = val_v

    def monomial_value(self, e_u: int, e_v: int) -> ValueElement:
        return self.val_u.scale(e_u) + self.val_v.scale(e_v)

    def value_of(self, support: Iterable[Monomial]) -> ValueElement:
        """min over the support; unique attainment is guaranteed."""
        pairs = check_support(support)
        best = None
        for e_u, e_v in pairs:
            val = self.monomial_value(e_u, e_v)
            if best is None or val < best:
                best = val
        return best

    def series_value(self, monomials: Iterable[Monomial]) -> tuple[ValueElement, int]:
        """Value of a power series given by a degree-ordered monomial stream.

        The stream must yield support monomials in nondecreasing total
        degree.  Consumption stops at the first monomial whose total degree
        n satisfies n * min(val_u, val_v) > (current minimum): no later
        monomial can lower the minimum.  Returns (value, n).  If the stream
        is finite, n is the least such integer degree.
        """
        small = self.val_u if self.val_u < self.val_v else self.val_v
        it: Iterator[Monomial] = iter(monomials)
        best = None
        last_deg = -1
        for e_u, e_v in it:
            deg = e_u + e_v
            if deg < last_deg:
                raise ValuationError("stream not ordered by total degree")
            last_deg = deg
            if best is not None and small.scale(deg) > best:
                return best, deg
            val = self.monomial_value(e_u, e_v)
            if best is None or val < best:
                best = val
        if best is None:
            raise ValuationError("empty stream")
        n = last_deg + 1
        while not small.scale(n) > best:
            n += 1
        return best, n


def group_index(sub_gens: tuple[ValueElement, ValueElement],
                super_gens: tuple[ValueElement, ValueElement]) -> int:
    """Index of the group generated by sub_gens inside the one from super_gens.

    Solves each sub generator as an integer combination of the super
    generators in (1, tau)-coordinates; the index is |det| of the integer
    coefficient matrix.
    """
    s1, s2 = super_gens
    s1._check(s2)
    a1, b1 = s1.coords()
    a2, b2 = s2.coords()
    det = a1 * b2 - b1 * a2
    if det == 0:
        raise ValuationError("supergroup generators are rationally dependent")
    rows = []
    for g in sub_gens:
        s1._check(g)
        x, y = g.coords()
        c1 = (x * b2 - y * a2) / det
        c2 = (a1 * y - b1 * x) / det
        if c1.denominator != 1 or c2.denominator != 1:
            raise NotASubgroupError(
                f"{g!r} is not an integer combination of the supergroup generators")
        rows.append((int(c1), int(c2)))
    d = rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    if d == 0:
        raise ValuationError("subgroup generators are rationally dependent")
    return abs(d)
