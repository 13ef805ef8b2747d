"""End-to-end construction and verification of the two-branch obstruction.

Builds the (q, p) instance: the quadratic irrational tau, the valuation
with values (tau, 1) on (u, v), its unique extensions to the two degree-q
and degree-p root covers, and the exponent matrices relating (u, v) to
the chart parameters.  Sweeps quadratic transforms along both branches,
certifying at every step that the ring lying below is singular, and emits
the final report: the two branches force local fundamental groups of
orders q and p, which cannot both hold for one ring since q != p.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .qfield import QuadExt, tau_from_a
from .valuation import MonomialValuation, ValueElement, group_index
from .transform import Matrix2, TransformState, quadratic_step
from .toric import (adjugate, below_ring_regularity, det_int,
                    smith_normal_form)
from .quotient import DiagonalAction, is_prime, pi1_order


class ConfigError(ValueError):
    def __init__(self, constraint: str, message: str):
        super().__init__(message)
        self.constraint = constraint


class CharConstraint(enum.Enum):
    ZERO = "Zero"
    ODD_PRIME_NOT_DIVIDING = "OddPrimeNotDividing"


@dataclass(frozen=True)
class InstanceConfig:
    q: int
    p: int
    m: int = 3
    n: int = 3
    steps: int = 25
    char_constraint: CharConstraint = CharConstraint.ZERO

    def chart_exponents(self) -> tuple[tuple[int, int, int, int], tuple[int, int, int, int]]:
        """(a, b, c, d) exponent quadruples for the two charts."""
        return ((self.q - 4, self.q - 2, 2, 1), (self.p - 4, self.p - 2, 2, 1))

    def validate(self) -> None:
        q, p, m, n = self.q, self.p, self.m, self.n
        if not is_prime(q) or q <= 3:
            raise ConfigError("q prime > 3", f"q={q} must be a prime greater than 3")
        if not is_prime(p):
            raise ConfigError("p prime", f"p={p} must be prime")
        if not (5 <= q < p < 2 * q - 4):
            raise ConfigError("5 <= q < p < 2q-4",
                              f"(q, p)=({q}, {p}) violates 5 <= q < p < 2q-4")
        a1, b1, c1, d1 = self.chart_exponents()[0]
        a2, b2, c2, d2 = self.chart_exponents()[1]
        m_bound = max(abs(a1 - a2), abs(c1 - c2))
        n_bound = max(abs(b1 - b2), abs(d1 - d2))
        if m <= 0 or m % 2 == 0:
            raise ConfigError("m odd positive", f"m={m} must be odd and positive")
        if n <= 0 or n % 2 == 0:
            raise ConfigError("n odd positive", f"n={n} must be odd and positive")
        if m <= m_bound:
            raise ConfigError("m > max(|a1-a2|, |c1-c2|)",
                              f"m={m} must exceed {m_bound}")
        if n <= n_bound:
            raise ConfigError("n > max(|b1-b2|, |d1-d2|)",
                              f"n={n} must exceed {n_bound}")
        if self.steps < 0:
            raise ConfigError("steps >= 0", "steps must be nonnegative")


@dataclass(frozen=True)
class BranchData:
    """One root cover: exponent matrix and exact chart parameter values."""

    name: str
    order: int
    matrix: Matrix2
    chart_values: tuple[ValueElement, ValueElement]


@dataclass(frozen=True)
class Instance:
    config: InstanceConfig
    tau: QuadExt
    epsilon: QuadExt
    base_values: tuple[ValueElement, ValueElement]
    branches: tuple[BranchData, BranchData]


def build(config: InstanceConfig) -> Instance:
    """Construct and exactly certify the instance.

    Certifies 0 < epsilon < 1, positivity of all four chart values, that
    the value group indices are q and p (by both the linear-system and the
    Smith-form routes), and the matrix determinants.
    """
    config.validate()
    q, p = config.q, config.p
    tau = tau_from_a(q - 4)
    epsilon = tau - (q - 4)
    if not (epsilon.sign() > 0 and (epsilon - 1).sign() < 0):
        raise ConfigError("0 < epsilon < 1", "epsilon outside (0, 1)")

    val_u = ValueElement.make(0, 1, 1, tau)  # value tau
    val_v = ValueElement.make(1, 0, 1, tau)  # value 1
    MonomialValuation(val_u, val_v)  # validates independence and positivity

    branches = []
    for name, order in (("nu1", q), ("nu2", p)):
        # root value (2+tau)/order; chart parameters v/root and root^2/v
        x1 = ValueElement.make(order - 2, -1, order, tau)
        y1 = ValueElement.make(4 - order, 2, order, tau)
        for label, val in (("x", x1), ("y", y1)):
            if val.sign() <= 0:
                raise ConfigError(f"{name}({label}1) > 0",
                                  f"chart value {label}1 not positive on {name}")
        a = ((order - 4, order - 2), (2, 1))
        # the defining relations x1 = v/z, y1 = z^2/v at value level
        root = ValueElement.make(2, 1, order, tau)
        assert x1 + root == val_v
        assert root.scale(2) - val_v == y1
        # row i of A expresses u resp. v in the chart parameters
        assert x1.scale(a[0][0]) + y1.scale(a[0][1]) == val_u
        assert x1.scale(a[1][0]) + y1.scale(a[1][1]) == val_v
        d = det_int(a)
        if abs(d) != order:
            raise ConfigError("matrix determinant", f"|det|={abs(d)} != {order}")
        idx = group_index((val_u, val_v), (x1, y1))
        invariants = smith_normal_form(a).quotient_invariants()
        if idx != order or invariants != [order]:
            raise ConfigError("value group index",
                              f"index {idx}, Smith invariants {invariants}, expected {order}")
        branches.append(BranchData(name, order, a, (x1, y1)))

    return Instance(config, tau, epsilon, (val_u, val_v), tuple(branches))


@dataclass(frozen=True)
class ChartCorrections:
    """Unit-correction exponents certifying the chart relations.

    In each chart, u and v are monomials in the local parameters times
    units; the units differ from constants by terms whose exponents are
    these corrections, all of which must be strictly positive.
    """

    chart: str
    u_correction: tuple[int, int]
    v_correction: tuple[int, int]


def validate_surface(config: InstanceConfig) -> tuple[ChartCorrections, ChartCorrections]:
    config.validate()
    (a1, b1, c1, d1), (a2, b2, c2, d2) = config.chart_exponents()
    m, n = config.m, config.n
    charts = []
    for chart, (own, other) in (("P1", ((a1, b1, c1, d1), (a2, b2, c2, d2))),
                                ("P2", ((a2, b2, c2, d2), (a1, b1, c1, d1)))):
        ao, bo, co, do = own
        at, bt, ct, dt = other
        u_corr = (at + m - ao, bt + n - bo)
        v_corr = (ct + m - co, dt + n - do)
        for label, corr in (("u", u_corr), ("v", v_corr)):
            if corr[0] <= 0 or corr[1] <= 0:
                raise ConfigError(
                    "positive unit correction",
                    f"{chart}: correction {corr} for {label} not positive; "
                    f"m, n bounds violated")
        charts.append(ChartCorrections(chart, u_corr, v_corr))
    return tuple(charts)


@dataclass(frozen=True)
class StepRecord:
    branch: str
    step: int
    matrix: Matrix2
    det: int
    regular: bool
    embedding_dim: int


class Verdict(enum.Enum):
    VERIFIED = "Verified"
    FALSIFIED = "Falsified"


@dataclass(frozen=True)
class SweepReport:
    verdict: Verdict
    records: tuple[StepRecord, ...]
    falsification: str | None = None


def singularity_sweep(instance: Instance, steps: int,
                      inject: dict[tuple[str, int], Matrix2] | None = None) -> SweepReport:
    """Transform sweep with a regularity check at every step of each branch.

    A Regular verdict or a determinant drift at any step falsifies the
    construction; that outcome is reported, not raised.  `inject`
    substitutes matrices at chosen (branch, step) keys so the
    falsification channel itself can be exercised.
    """
    inject = inject or {}
    records = []
    falsification = None
    for branch in instance.branches:
        state = TransformState(branch.matrix, branch.chart_values)
        for step in range(steps + 1):
            matrix = inject.get((branch.name, step), state.a)
            verdict = below_ring_regularity(matrix)
            records.append(StepRecord(branch.name, step, matrix, verdict.det,
                                      verdict.regular, verdict.embedding_dim))
            if falsification is None:
                if verdict.regular:
                    falsification = (f"branch {branch.name} step {step}: "
                                     f"ring below is regular")
                elif abs(verdict.det) != branch.order:
                    falsification = (f"branch {branch.name} step {step}: "
                                     f"|det|={abs(verdict.det)} != {branch.order}")
            if step < steps:
                state = quadratic_step(state)
    verdict = Verdict.FALSIFIED if falsification else Verdict.VERIFIED
    return SweepReport(verdict, tuple(records), falsification)


def derive_diagonal_action(matrix: Matrix2) -> DiagonalAction:
    """The cyclic action on the chart parameters induced by the lattice
    quotient Z^2 / A Z^2, with weights read off the adjugate rows at a
    generator of the quotient (prime order only)."""
    a = np.array(matrix, dtype=object)
    d = abs(det_int(a))
    form = smith_normal_form(a)
    invariants = form.quotient_invariants()
    if invariants != [d]:
        raise ConfigError("cyclic quotient", f"quotient invariants {invariants} not cyclic")
    # generator of the quotient: preimage under U of the last unit vector
    u_inv = adjugate(form.u) * det_int(form.u)
    gen = (u_inv[0, 1], u_inv[1, 1])
    adj = adjugate(a)
    w1 = (adj[0, 0] * gen[0] + adj[0, 1] * gen[1]) % d
    w2 = (adj[1, 0] * gen[0] + adj[1, 1] * gen[1]) % d
    return DiagonalAction(d, int(w1), int(w2))


@dataclass(frozen=True)
class ContradictionReport:
    sweep: SweepReport
    orders: dict[str, int]
    conflict: bool

    @property
    def verdict(self) -> Verdict:
        return self.sweep.verdict


def contradiction_report(instance: Instance, steps: int) -> ContradictionReport:
    """Run the sweep and certify the conflicting fundamental-group orders.

    Both branches must stay singular; the induced cyclic actions then give
    local fundamental groups of order q and p respectively, and q != p is
    checked by machine: no single normal local ring lies below both.
    """
    sweep = singularity_sweep(instance, steps)
    if sweep.verdict is not Verdict.VERIFIED:
        raise ConfigError("sweep verified", f"sweep falsified: {sweep.falsification}")
    orders = {}
    for branch in instance.branches:
        action = derive_diagonal_action(branch.matrix)
        order = pi1_order(action)
        # consistency with the regularity verdict of the same matrix
        reg = below_ring_regularity(branch.matrix)
        if (order == 1) != reg.regular:
            raise ConfigError("pi1/regularity consistency",
                              f"branch {branch.name}: order {order} vs {reg.label}")
        if order != branch.order:
            raise ConfigError("pi1 order", f"branch {branch.name}: "
                              f"order {order} != {branch.order}")
        orders[branch.name] = order
    conflict = orders["nu1"] != orders["nu2"]
    if not conflict:  # pragma: no cover - excluded by q != p in the config window
        raise ConfigError("q != p", "branch orders coincide; no obstruction")
    return ContradictionReport(sweep, orders, conflict)
