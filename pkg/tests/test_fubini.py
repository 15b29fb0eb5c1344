import math

import numpy as np
import pytest

from choqkit import (FubiniInstance, PreconditionError, SetFunction, choquet,
                     lln_run, lopsided_check, marginal_g, total_variation,
                     uniform_continuity_modulus)
from choqkit.randgen import random_fubini_instance


def simple_instance():
    phi = SetFunction.coverage([[0], [0, 1], [1]], [1.0, 2.0])
    return FubiniInstance.of([0.5, 0.5], [1 / 3] * 3,
                             [[0.0, 1.0, 0.0], [1.0, 0.0, 1.0]], phi)


class TestInstanceValidation:
    def test_rejects_nonsubmodular_phi(self):
        phi = SetFunction.from_table([0, 0, 0, 1])
        with pytest.raises(PreconditionError):
            FubiniInstance.of([1.0], [0.5, 0.5], [[0.0, 1.0]], phi)

    def test_rejects_negative_phi(self):
        phi = SetFunction.modular([-1.0, 1.0])
        with pytest.raises(PreconditionError):
            FubiniInstance.of([1.0], [0.5, 0.5], [[0.0, 1.0]], phi)

    def test_force_skips_hypotheses(self):
        phi = SetFunction.from_table([0, 0, 0, 1])
        inst = FubiniInstance.of([1.0], [0.5, 0.5], [[0.0, 1.0]], phi,
                                 validate=False)
        assert not inst.validated

    def test_rejects_bad_probabilities(self):
        phi = SetFunction.uniform_matroid(2, 1)
        with pytest.raises(ValueError):
            FubiniInstance.of([0.7, 0.7], [0.5, 0.5], [[0, 0], [0, 0]], phi)
        with pytest.raises(ValueError):
            FubiniInstance.of([0.5, 0.5], [1.0, 0.0], [[0, 0], [0, 0]], phi)


class TestMarginal:
    def test_constant_matrix(self):
        phi = SetFunction.uniform_matroid(2, 1)
        inst = FubiniInstance.of([0.3, 0.7], [0.5, 0.5],
                                 [[2.0, 2.0], [2.0, 2.0]], phi)
        assert marginal_g(inst).values == pytest.approx((2.0, 2.0))

    def test_point_mass_picks_row(self):
        phi = SetFunction.uniform_matroid(2, 1)
        inst = FubiniInstance.of([0.0, 1.0], [0.5, 0.5],
                                 [[1.0, 2.0], [3.0, 4.0]], phi)
        assert marginal_g(inst).values == pytest.approx((3.0, 4.0))

    def test_uniform_average(self):
        assert marginal_g(simple_instance()).values == pytest.approx(
            (0.5, 0.5, 0.5))


class TestLopsided:
    def test_point_mass_lambda_is_tight(self):
        phi = SetFunction.uniform_matroid(3, 2)
        inst = FubiniInstance.of([1.0], [1 / 3] * 3, [[0.2, 0.9, 0.4]], phi)
        result = lopsided_check(inst)
        assert result.holds
        assert result.slack == pytest.approx(0.0, abs=1e-12)

    def test_equal_rows_are_tight(self):
        phi = SetFunction.uniform_matroid(3, 2)
        row = [0.1, 0.5, 0.3]
        inst = FubiniInstance.of([0.25, 0.75], [1 / 3] * 3, [row, row], phi)
        assert lopsided_check(inst).slack == pytest.approx(0.0, abs=1e-12)

    def test_random_instances_hold(self, rng):
        for _ in range(100):
            inst = random_fubini_instance(rng, int(rng.integers(2, 9)),
                                          int(rng.integers(2, 9)))
            result = lopsided_check(inst)
            assert result.holds, result

    def test_slack_matches_direct_subadditivity(self):
        inst = simple_instance()
        result = lopsided_check(inst)
        # lambda-average = sum of scaled rows; subadditivity + homogeneity
        phi = inst.phi
        scaled = [np.array(row) * w for row, w in zip(inst.F, inst.lam)]
        direct = sum(choquet(phi, r) for r in scaled)
        assert result.lhs <= direct + 1e-9
        assert direct == pytest.approx(result.rhs, abs=1e-9)


class TestLlnRun:
    def test_single_step(self):
        inst = simple_instance()
        trace = lln_run(inst, steps=1, seed=0)
        rec = trace.records[0]
        row = inst.F[trace.samples[0]]
        assert rec.what_f == pytest.approx(choquet(inst.phi, row))
        g = marginal_g(inst).values
        assert rec.norm_h == pytest.approx(
            max(abs(a - b) for a, b in zip(g, row)))

    def test_deterministic_lambda(self):
        phi = SetFunction.uniform_matroid(2, 1)
        inst = FubiniInstance.of([0.0, 1.0], [0.5, 0.5],
                                 [[0.0, 0.0], [0.25, 0.75]], phi)
        trace = lln_run(inst, steps=50, seed=1)
        for rec in trace.records:
            assert rec.norm_h == pytest.approx(0.0, abs=1e-12)
            assert rec.what_h == pytest.approx(0.0, abs=1e-12)

    def test_reproducible_from_seed(self):
        inst = simple_instance()
        a = lln_run(inst, steps=100, seed=7)
        b = lln_run(inst, steps=100, seed=7)
        assert a.samples == b.samples
        assert a.records == b.records

    def test_trace_invariants(self, rng):
        inst = random_fubini_instance(rng, 5, 5)
        inst = FubiniInstance.of(inst.lam, inst.pi, inst.F, inst.phi.as_table())
        trace = lln_run(inst, steps=500, seed=11)  # asserts bounds internally
        k_phi = total_variation(inst.phi)
        final = trace.records[-1]
        assert abs(final.what_h) <= 2.0 * k_phi * final.norm_h + 1e-9
        assert final.what_f <= final.running_avg + 1e-9

    def test_rejects_zero_steps(self):
        with pytest.raises(PreconditionError):
            lln_run(simple_instance(), steps=0)


class TestUniformContinuity:
    def test_huge_epsilon_gives_infinite_delta(self, path_cut):
        table = uniform_continuity_modulus(path_cut, [1 / 3] * 3,
                                           epsilons=[100.0])
        assert table == [(100.0, math.inf)]

    def test_measure_is_lipschitz_wrt_itself(self):
        pi = (0.25, 0.25, 0.25, 0.25)
        phi = SetFunction.modular(pi)
        for eps, delta in uniform_continuity_modulus(phi, pi):
            assert delta == pytest.approx(eps, abs=1e-12)

    def test_delta_dominates_epsilon_for_measures(self, rng):
        for _ in range(10):
            pi = rng.uniform(0.1, 1.0, size=4)
            pi /= pi.sum()
            phi = SetFunction.modular(pi)
            for eps, delta in uniform_continuity_modulus(phi, pi):
                assert delta >= eps - 1e-12

    def test_exhaustive_small_coverage(self):
        phi = SetFunction.coverage([[0], [0, 1], [1]], [1.0, 2.0])
        pi = (1 / 3, 1 / 3, 1 / 3)
        vals = phi.table()
        for eps, delta in uniform_continuity_modulus(phi, pi):
            best = math.inf
            for s in range(8):
                for t in range(8):
                    if abs(vals[s] - vals[t]) >= eps:
                        sym = sum(pi[x] for x in range(3) if (s ^ t) >> x & 1)
                        best = min(best, sym)
            assert delta == pytest.approx(best)
