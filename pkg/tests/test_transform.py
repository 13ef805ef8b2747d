import pytest

from valsweep.qfield import partial_quotients, tau_from_a
from valsweep.transform import (Branch, TransformState, branch_run_lengths,
                                convergent_parameters, det2, quadratic_step,
                                run_sequence)
from valsweep.valuation import ValuationError, ValueElement

TAU7 = tau_from_a(7)


def ve(i, j, n, tau=TAU7):
    return ValueElement.make(i, j, n, tau)


def chart_state_q11():
    # parameters of the degree-11 chart: values ((9-tau)/11, (2 tau-7)/11)
    return TransformState(((7, 9), (2, 1)), (ve(9, -1, 11), ve(-7, 2, 11)))


def identity_state(tau=TAU7):
    return TransformState(((1, 0), (0, 1)),
                          (ValueElement.make(0, 1, 1, tau),
                           ValueElement.make(1, 0, 1, tau)))


class TestQuadraticStep:
    def test_chart_step(self):
        state = quadratic_step(chart_state_q11())
        assert state.a == ((16, 9), (3, 1))
        assert state.param_values == (ve(9, -1, 11), ve(-16, 3, 11))
        assert state.det == -11
        assert state.param_values[1].sign() > 0

    def test_identity_first_larger(self):
        state = quadratic_step(identity_state())
        assert state.a == ((1, 1), (0, 1))
        assert state.step_log == (Branch.DIVIDE_SECOND_INTO_FIRST,)

    def test_branch_flip_after_seven_steps(self):
        state = chart_state_q11()
        for _ in range(7):
            state = quadratic_step(state)
            assert state.step_log[-1] is state.step_log[0]
        assert state.a == ((70, 9), (9, 1))
        flipped = quadratic_step(state)
        assert flipped.step_log[-1] is not state.step_log[0]

    def test_values_stay_positive(self):
        state = chart_state_q11()
        for _ in range(30):
            state = quadratic_step(state)
            assert all(v.sign() > 0 for v in state.param_values)


class TestRunSequence:
    def test_det_preserved_q11(self):
        states = run_sequence(chart_state_q11(), 2)
        assert [s.det for s in states] == [-11, -11, -11]

    def test_zero_steps(self):
        states = run_sequence(chart_state_q11(), 0)
        assert len(states) == 1

    def test_det_preserved_p13(self):
        initial = TransformState(((9, 11), (2, 1)), (ve(11, -1, 13), ve(-9, 2, 13)))
        states = run_sequence(initial, 5)
        assert all(s.det == -13 for s in states)

    def test_matrix_reproduces_original_values(self):
        for state in run_sequence(chart_state_q11(), 20):
            assert state.original_values() == (ve(0, 1, 1), ve(1, 0, 1))

    def test_rows_nonnegative_nonzero(self):
        for state in run_sequence(chart_state_q11(), 20):
            for row in state.a:
                assert row[0] >= 0 and row[1] >= 0
                assert row != (0, 0)

    def test_branch_tags_encode_partial_quotients(self):
        states = run_sequence(identity_state(), 40)
        runs = branch_run_lengths(states)
        expected = partial_quotients(TAU7, len(runs))
        # the last run may be cut off mid-quotient by the step budget
        assert runs[:-1] == expected[:len(runs) - 1]
        assert runs[-1] <= expected[len(runs) - 1]


class TestStateValidation:
    def test_nonpositive_value_rejected(self):
        with pytest.raises(ValuationError):
            TransformState(((1, 0), (0, 1)), (ve(-1, 0, 1), ve(0, 1, 1)))

    def test_zero_row_rejected(self):
        with pytest.raises(ValuationError):
            TransformState(((0, 0), (0, 1)), (ve(0, 1, 1), ve(1, 0, 1)))

    def test_dependent_values_rejected(self):
        with pytest.raises(ValuationError):
            TransformState(((1, 0), (0, 1)), (ve(2, 0, 1), ve(1, 0, 1)))


class TestConvergentParameters:
    def test_a7_p2(self):
        m = convergent_parameters(TAU7, 2)
        assert m == ((8, 1), (63, 8))
        assert det2(m) == 1

    def test_golden_p1(self):
        m = convergent_parameters(tau_from_a(1), 1)
        assert m == ((1, 1), (2, 1))
        assert det2(m) == -1

    @pytest.mark.parametrize("a", [1, 7, 13])
    @pytest.mark.parametrize("p", range(1, 11))
    def test_positivity_certified(self, a, p):
        # construction raises if either derived parameter value is nonpositive
        m = convergent_parameters(tau_from_a(a), p)
        assert det2(m) in (-1, 1)

    def test_p_zero_rejected(self):
        with pytest.raises(ValuationError):
            convergent_parameters(TAU7, 0)
