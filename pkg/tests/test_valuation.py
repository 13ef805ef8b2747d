import itertools
import math
import random

import pytest

from valsweep.qfield import tau_from_a
from valsweep.valuation import (MonomialValuation, NotASubgroupError,
                                ValuationError, ValueElement, group_index)

TAU7 = tau_from_a(7)


def ve(i, j, n, tau=TAU7):
    return ValueElement.make(i, j, n, tau)


@pytest.fixture
def nu_bar():
    # values tau on u and 1 on v
    return MonomialValuation(ve(0, 1, 1), ve(1, 0, 1))


class TestValueElement:
    def test_canonical_reduction(self):
        x = ve(2, 4, 6)
        assert (x.i, x.j, x.n) == (1, 2, 3)

    def test_zero_iff_both_zero(self):
        assert ve(0, 0, 5).is_zero()
        assert not ve(1, -1, 1).is_zero()
        assert ve(1, -1, 1).sign() != 0  # 1 - tau != 0 since tau irrational

    def test_ordering(self):
        assert ve(0, 1, 1) > ve(1, 0, 1)  # tau > 1
        assert ve(9, -1, 11) < ve(-7, 2, 11)  # (9-tau)/11 < (2 tau-7)/11

    def test_arithmetic(self):
        assert ve(1, 0, 1) + ve(0, 1, 1) == ve(1, 1, 1)
        assert ve(1, 1, 2).scale(4) == ve(2, 2, 1)
        assert (ve(1, 2, 3) - ve(1, 2, 3)).is_zero()

    def test_mixed_tau_rejected(self):
        with pytest.raises(ValuationError):
            ve(1, 0, 1) + ve(1, 0, 1, tau_from_a(1))


class TestMakeValuation:
    def test_paper_pair_accepted(self, nu_bar):
        assert nu_bar.value_of([(1, 0)]) == ve(0, 1, 1)

    def test_rationally_dependent_rejected(self):
        with pytest.raises(ValuationError):
            MonomialValuation(ve(2, 0, 1), ve(1, 0, 1))

    def test_chart_values_accepted(self):
        v = MonomialValuation(ve(9, -1, 11), ve(-7, 2, 11))
        assert v.value_of([(1, 0)]).sign() > 0

    def test_nonpositive_rejected(self):
        with pytest.raises(ValuationError):
            MonomialValuation(ve(-1, 0, 1), ve(1, 0, 1))


class TestValueOf:
    def test_min_of_parameters(self, nu_bar):
        assert nu_bar.value_of([(1, 0), (0, 1)]) == ve(1, 0, 1)

    def test_single_monomial(self, nu_bar):
        assert nu_bar.value_of([(2, 3)]) == ve(3, 2, 1)

    def test_exact_tie_break(self, nu_bar):
        # min(tau+2, 3 tau) = tau+2 since tau > 1
        assert nu_bar.value_of([(1, 2), (3, 0)]) == ve(2, 1, 1)

    def test_empty_rejected(self, nu_bar):
        with pytest.raises(ValuationError):
            nu_bar.value_of([])

    def test_duplicate_rejected(self, nu_bar):
        with pytest.raises(ValuationError):
            nu_bar.value_of([(1, 0), (1, 0)])


class TestSeriesValue:
    def test_low_terms_then_tail(self, nu_bar):
        stream = [(1, 0), (0, 1)] + [(i, 9 - i) for i in range(10)]
        value, bound = nu_bar.series_value(stream)
        assert value == ve(1, 0, 1)
        assert bound == 9

    def test_single_monomial(self, nu_bar):
        value, bound = nu_bar.series_value([(0, 1)])
        assert value == ve(1, 0, 1)
        assert bound == 2

    def test_finite_stream_bound(self, nu_bar):
        value, bound = nu_bar.series_value([(2, 3), (5, 0)])
        assert value == ve(3, 2, 1)  # 2 tau + 3 < 5 tau
        assert bound == 19  # least n with n > 2 tau + 3 ~ 18.77

    def test_infinite_stream_terminates(self, nu_bar):
        def stream():
            yield (1, 0)
            yield (0, 1)
            deg = 9
            while True:
                yield (deg, 0)
                deg += 1

        value, bound = nu_bar.series_value(stream())
        assert value == ve(1, 0, 1)
        assert bound == 9

    def test_stable_under_longer_prefixes(self, nu_bar):
        base = [(2, 1), (1, 3), (4, 4)]
        tail = [(k, 0) for k in range(9, 40)]
        v1, b1 = nu_bar.series_value(base + tail[:5])
        v2, b2 = nu_bar.series_value(base + tail)
        assert v1 == v2 and b1 == b2

    def test_unordered_rejected(self, nu_bar):
        with pytest.raises(ValuationError):
            nu_bar.series_value([(0, 3), (1, 0)])

    def test_empty_rejected(self, nu_bar):
        with pytest.raises(ValuationError):
            nu_bar.series_value([])


class TestGroupIndex:
    def test_index_eleven(self):
        sub = (ve(0, 1, 1), ve(1, 0, 1))
        sup = (ve(9, -1, 11), ve(-7, 2, 11))
        assert group_index(sub, sup) == 11

    def test_identity(self):
        gens = (ve(0, 1, 1), ve(1, 0, 1))
        assert group_index(gens, gens) == 1

    def test_index_thirteen(self):
        # chart values of the second branch for (q, p) = (11, 13)
        sub = (ve(0, 1, 1), ve(1, 0, 1))
        sup = (ve(11, -1, 13), ve(-9, 2, 13))
        assert group_index(sub, sup) == 13

    def test_non_containment_detected(self):
        sub = (ve(1, 0, 2), ve(0, 1, 1))  # 1/2 is not in Z + Z tau
        sup = (ve(1, 0, 1), ve(0, 1, 1))
        with pytest.raises(NotASubgroupError):
            group_index(sub, sup)


class TestInvariants:
    def test_multiplicativity_on_random_supports(self, nu_bar):
        rng = random.Random(7)
        for _ in range(500):
            f = {(rng.randint(0, 8), rng.randint(0, 8)) for _ in range(rng.randint(1, 5))}
            g = {(rng.randint(0, 8), rng.randint(0, 8)) for _ in range(rng.randint(1, 5))}
            prod = {(a + c, b + d) for a, b in f for c, d in g}
            assert nu_bar.value_of(prod) == nu_bar.value_of(f) + nu_bar.value_of(g)

    def test_ultrametric(self, nu_bar):
        rng = random.Random(11)
        for _ in range(200):
            f = {(rng.randint(0, 8), rng.randint(0, 8)) for _ in range(rng.randint(1, 5))}
            g = {(rng.randint(0, 8), rng.randint(0, 8)) for _ in range(rng.randint(1, 5))}
            vf, vg = nu_bar.value_of(f), nu_bar.value_of(g)
            vsum = nu_bar.value_of(f | g)
            assert vsum >= min(vf, vg)
            if vf != vg:
                assert vsum == min(vf, vg)

    def test_denominator_divides_lcm(self):
        val = MonomialValuation(ve(9, -1, 11), ve(-7, 2, 11))
        lcm = 11
        for e_u, e_v in itertools.product(range(6), repeat=2):
            if (e_u, e_v) == (0, 0):
                continue
            res = val.value_of([(e_u, e_v)])
            assert lcm % res.n == 0
