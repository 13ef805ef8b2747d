import pytest

from valsweep.counterexample import (ConfigError, InstanceConfig, Verdict, build,
                                     contradiction_report, derive_diagonal_action,
                                     singularity_sweep, validate_surface)
from valsweep.qfield import QuadExt
from valsweep.quotient import is_prime


class TestConfig:
    def test_paper_pair_accepted(self):
        InstanceConfig(q=11, p=13, m=3, n=3).validate()

    def test_second_pair_accepted(self):
        InstanceConfig(q=17, p=23, m=7, n=7).validate()

    def test_window_violation_rejected(self):
        with pytest.raises(ConfigError) as exc:
            InstanceConfig(q=11, p=19, m=9, n=9).validate()
        assert "2q-4" in exc.value.constraint

    def test_small_m_rejected(self):
        with pytest.raises(ConfigError):
            InstanceConfig(q=11, p=13, m=1, n=3).validate()

    def test_even_m_rejected(self):
        with pytest.raises(ConfigError):
            InstanceConfig(q=11, p=13, m=4, n=3).validate()

    def test_equal_primes_rejected(self):
        with pytest.raises(ConfigError):
            InstanceConfig(q=11, p=11, m=3, n=3).validate()


class TestBuild:
    def test_q11_p13(self):
        inst = build(InstanceConfig(q=11, p=13))
        assert inst.tau == QuadExt(7, 1, 2, 77)
        b1, b2 = inst.branches
        assert b1.matrix == ((7, 9), (2, 1))
        assert b2.matrix == ((9, 11), (2, 1))
        assert all(v.sign() > 0 for v in b1.chart_values + b2.chart_values)

    def test_q17_p23(self):
        inst = build(InstanceConfig(q=17, p=23, m=7, n=7))
        assert inst.branches[0].matrix == ((13, 15), (2, 1))
        assert inst.branches[1].matrix == ((19, 21), (2, 1))

    def test_epsilon_in_unit_interval(self):
        inst = build(InstanceConfig(q=11, p=13))
        assert inst.epsilon.sign() > 0
        assert (inst.epsilon - 1).sign() < 0

    def test_epsilon_window_all_primes(self):
        for q in range(5, 51):
            if not is_prime(q):
                continue
            from valsweep.qfield import tau_from_a
            tau = tau_from_a(q - 4)
            eps = tau - (q - 4)
            assert eps.sign() > 0 and (eps - 1).sign() < 0

    def test_defining_relations_hold(self):
        # x1 + z = v and 2 z - v = y1 at value level, checked in build
        build(InstanceConfig(q=11, p=13))


class TestSurface:
    def test_q11_p13_corrections(self):
        charts = validate_surface(InstanceConfig(q=11, p=13, m=3, n=3))
        p1, p2 = charts
        assert (p1.u_correction, p1.v_correction) == ((5, 5), (3, 3))
        assert (p2.u_correction, p2.v_correction) == ((1, 1), (3, 3))

    def test_q17_p23_corrections(self):
        charts = validate_surface(InstanceConfig(q=17, p=23, m=7, n=7))
        p1, _ = charts
        assert (p1.u_correction, p1.v_correction) == ((13, 13), (7, 7))

    def test_too_small_m_rejected_at_config(self):
        with pytest.raises(ConfigError):
            validate_surface(InstanceConfig(q=11, p=13, m=1, n=3))


class TestSweep:
    def test_q11_p13_full(self):
        inst = build(InstanceConfig(q=11, p=13))
        report = singularity_sweep(inst, 25)
        assert report.verdict is Verdict.VERIFIED
        assert len(report.records) == 52
        for rec in report.records:
            assert not rec.regular
            assert rec.embedding_dim >= 3
            assert abs(rec.det) == (11 if rec.branch == "nu1" else 13)

    def test_step_zero_only(self):
        inst = build(InstanceConfig(q=11, p=13))
        report = singularity_sweep(inst, 0)
        assert [r.det for r in report.records] == [-11, -13]
        assert report.verdict is Verdict.VERIFIED

    def test_step_one_matrix(self):
        inst = build(InstanceConfig(q=11, p=13))
        report = singularity_sweep(inst, 1)
        nu1 = [r for r in report.records if r.branch == "nu1"]
        assert nu1[0].matrix == ((7, 9), (2, 1))
        assert nu1[1].matrix == ((16, 9), (3, 1))

    def test_falsification_injection(self):
        inst = build(InstanceConfig(q=11, p=13))
        report = singularity_sweep(inst, 5, inject={("nu1", 3): ((1, 0), (0, 1))})
        assert report.verdict is Verdict.FALSIFIED
        assert "regular" in report.falsification


class TestContradiction:
    def test_q11_p13(self):
        inst = build(InstanceConfig(q=11, p=13))
        report = contradiction_report(inst, 25)
        assert report.orders == {"nu1": 11, "nu2": 13}
        assert report.conflict

    def test_q17_p23(self):
        inst = build(InstanceConfig(q=17, p=23, m=7, n=7))
        report = contradiction_report(inst, 10)
        assert report.orders == {"nu1": 17, "nu2": 23}
        assert report.conflict


class TestDerivedAction:
    def test_q11(self):
        action = derive_diagonal_action(((7, 9), (2, 1)))
        assert action.order == 11
        assert action.a != 0 and action.b != 0

    def test_regular_matrix(self):
        with pytest.raises(ConfigError):
            # unimodular matrix has trivial quotient, not a cyclic prime group
            derive_diagonal_action(((1, 1), (0, 1)))
