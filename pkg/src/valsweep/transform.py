"""Quadratic-transform sequences along a monomial valuation.

A state tracks the 2x2 exponent matrix A whose rows express the original
parameters u, v in the current parameters, together with the exact values
of the current parameters.  Each step divides the larger-value parameter
by the smaller one; on A this is an elementary column operation, so
det(A) is constant along the sequence.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .qfield import QuadExt, convergents
from .valuation import ValueElement, ValuationError


class Branch(enum.Enum):
    # second parameter has the larger value and is divided by the first
    DIVIDE_FIRST_INTO_SECOND = "DivideFirstIntoSecond"
    # first parameter has the larger value and is divided by the second
    DIVIDE_SECOND_INTO_FIRST = "DivideSecondIntoFirst"


Matrix2 = tuple[tuple[int, int], tuple[int, int]]


def det2(a: Matrix2) -> int:
    return a[0][0] * a[1][1] - a[0][1] * a[1][0]


@dataclass(frozen=True)
class TransformState:
    a: Matrix2
    param_values: tuple[ValueElement, ValueElement]
    step_log: tuple[Branch, ...] = ()

    def __post_init__(self):
        vx, vy = self.param_values
        if vx.sign() <= 0 or vy.sign() <= 0:
            raise ValuationError("parameter values must be positive")
        if vx.i * vy.j - vx.j * vy.i == 0:
            raise ValuationError("parameter values are rationally dependent")
        for row in self.a:
            if row[0] < 0 or row[1] < 0:
                raise ValuationError("exponent matrix must be nonnegative")
            if row == (0, 0):
                raise ValuationError("exponent matrix has a zero row")

    @property
    def det(self) -> int:
        return det2(self.a)

    def original_values(self) -> tuple[ValueElement, ValueElement]:
        """A applied to the current parameter values: (value of u, value of v)."""
        vx, vy = self.param_values
        return (vx.scale(self.a[0][0]) + vy.scale(self.a[0][1]),
                vx.scale(self.a[1][0]) + vy.scale(self.a[1][1]))


def quadratic_step(state: TransformState) -> TransformState:
    """One quadratic transform picked by the valuation.

    If the first parameter has the larger value it becomes (first/second),
    which adds column 1 of A into column 2; symmetrically otherwise.  Ties
    cannot occur for rationally independent values.
    """
    vx, vy = state.param_values
    s = (vx - vy).sign()
    if s == 0:  # pragma: no cover - excluded by rational independence
        raise AssertionError("equal parameter values: rational independence violated")
    (a, b), (c, d) = state.a
    if s > 0:
        branch = Branch.DIVIDE_SECOND_INTO_FIRST
        new_a = ((a, a + b), (c, c + d))
        new_vals = (vx - vy, vy)
    else:
        branch = Branch.DIVIDE_FIRST_INTO_SECOND
        new_a = ((a + b, b), (c + d, d))
        new_vals = (vx, vy - vx)
    return TransformState(new_a, new_vals, state.step_log + (branch,))


def run_sequence(initial: TransformState, steps: int) -> list[TransformState]:
    """The deterministic transform sequence: [initial, after 1 step, ...]."""
    if steps < 0:
        raise ValuationError("steps must be nonnegative")
    out = [initial]
    for _ in range(steps):
        out.append(quadratic_step(out[-1]))
    return out


def branch_run_lengths(states: list[TransformState]) -> list[int]:
    """Run-length encoding of the branch tags of the final state's log."""
    log = states[-1].step_log
    runs: list[int] = []
    prev = None
    for tag in log:
        if tag is prev:
            runs[-1] += 1
        else:
            runs.append(1)
            prev = tag
    return runs


def convergent_parameters(tau: QuadExt, p: int) -> Matrix2:
    """Parameter exponents from two consecutive convergents f_p/g_p of tau.

    Returns M = [[g_p, g_{p-1}], [f_p, f_{p-1}]], the matrix expressing
    (u, v) in the parameters (u_1, v_1) when u has value 1 and v has value
    tau.  Certifies det M = +-1 and that both new parameter values are
    strictly positive, by exact sign tests.
    """
    if p < 1:
        raise ValuationError("need p >= 1 so two consecutive convergents exist")
    cs = convergents(tau, p + 1)
    f0, g0 = cs[p - 1].f, cs[p - 1].g
    f1, g1 = cs[p].f, cs[p].g
    eps = f0 * g1 - f1 * g0
    assert eps in (-1, 1)
    # values of u_1, v_1 obtained by inverting M against (value u, value v) = (1, tau)
    u1 = (QuadExt.integer(f0, tau.d) - g0 * tau) * QuadExt.integer(eps, tau.d)
    v1 = (g1 * tau - QuadExt.integer(f1, tau.d)) * QuadExt.integer(eps, tau.d)
    if u1.sign() <= 0 or v1.sign() <= 0:
        raise AssertionError("convergent parameters produced a nonpositive value")
    return ((g1, g0), (f1, f0))
