"""Cyclic diagonal actions on two formal variables.

A generator acts by x -> w^a x, y -> w^b y for a primitive root of unity
w of prime order.  The module computes the invariant-monomial generators,
the Jacobian-minor ramification witnesses, and the order of the local
fundamental group of the invariant ring.
"""

from __future__ import annotations

from dataclasses import dataclass

from .toric import semigroup_contains


class QuotientError(ValueError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    f = 2
    while f * f <= n:
        if n % f == 0:
            return False
        f += 1 if f == 2 else 2
    return True


@dataclass(frozen=True)
class DiagonalAction:
    """Z_order acting by x -> w^a x, y -> w^b y, with prime order."""

    order: int
    a: int
    b: int

    def __post_init__(self):
        if not is_prime(self.order):
            raise QuotientError(f"order {self.order} is not prime")
        if not (0 <= self.a < self.order and 0 <= self.b < self.order):
            raise QuotientError("weights must lie in [0, order)")
        if self.a == 0 and self.b == 0:
            raise QuotientError("trivial action is not faithful")

    def is_invariant(self, e_x: int, e_y: int) -> bool:
        return (self.a * e_x + self.b * e_y) % self.order == 0

    def weight_map(self) -> dict[int, int]:
        """i -> j_i with b*j_i = a*i mod p and 0 < j_i < p, for a, b != 0."""
        p, a, b = self.order, self.a, self.b
        if a == 0 or b == 0:
            raise QuotientError("weight map needs both weights nonzero")
        b_inv = pow(b, -1, p)
        return {i: (a * i * b_inv) % p or p for i in range(1, p)}


Monomial = tuple[int, int]


def invariant_generators(action: DiagonalAction) -> tuple[list[Monomial], list[Monomial]]:
    """(full, minimal) generator sets of the invariant-monomial semigroup.

    With both weights nonzero the full set is
    {x^p, y^p} with x^{p-i} y^{j_i} for 1 <= i <= p-1; with one weight
    zero the invariant ring is regular with two generators.  The minimal
    set drops elements that are sums of others.
    """
    p = action.order
    if action.a == 0:
        full = [(1, 0), (0, p)]
    elif action.b == 0:
        full = [(p, 0), (0, 1)]
    else:
        jmap = action.weight_map()
        full = [(p, 0)] + [(p - i, jmap[i]) for i in range(1, p)] + [(0, p)]
    full = sorted(set(full))
    minimal = list(full)
    changed = True
    while changed:
        changed = False
        for g in list(minimal):
            rest = tuple(h for h in minimal if h != g)
            if len(rest) >= 1 and semigroup_contains(rest, g):
                minimal.remove(g)
                changed = True
    return full, sorted(minimal)


def brute_force_invariants(action: DiagonalAction, max_degree: int) -> list[Monomial]:
    """All invariant monomials of total degree in (0, max_degree]."""
    out = []
    for i in range(max_degree + 1):
        for j in range(max_degree + 1 - i):
            if i + j > 0 and action.is_invariant(i, j):
                out.append((i, j))
    return sorted(out)


@dataclass(frozen=True)
class RamificationWitness:
    """The two Jacobian 2x2 minors that are pure powers: coefficient p
    times y^(p-1+j_{p-1}) and p times x^(2p-1-i_1)."""

    coefficient: int
    y_witness: Monomial
    x_witness: Monomial


def ramification_minors(action: DiagonalAction) -> RamificationWitness:
    """Witness minors certifying the branch locus is the closed point.

    Both witnesses are nonzero pure powers (the coefficient p is a unit in
    any allowed characteristic), so the radical of the minor ideal is
    (x, y) and the quotient map is unramified away from it.
    """
    p = action.order
    if action.a == 0 or action.b == 0:
        raise QuotientError("ramification witnesses need both weights nonzero")
    jmap = action.weight_map()
    j_last = jmap[p - 1]
    i_1 = next((i for i, j in jmap.items() if j == 1), None)
    if i_1 is None:  # pragma: no cover - impossible for prime order, b invertible
        raise AssertionError("no invariant of the form x^(p-i) y")
    return RamificationWitness(coefficient=p,
                               y_witness=(0, p - 1 + j_last),
                               x_witness=(2 * p - 1 - i_1, 0))


def is_regular(action: DiagonalAction) -> bool:
    return action.a == 0 or action.b == 0


def pi1_order(action: DiagonalAction) -> int:
    """Order of the local fundamental group of the invariant ring:
    1 when the ring is regular, the group order otherwise."""
    return 1 if is_regular(action) else action.order
