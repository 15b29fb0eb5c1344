import numpy as np
import pytest

from choqkit import (FlaggedSet, IntervalSet, IntervalSetFunction, StepFunction,
                     ae_gap, choquet_interval, extend_ls, extend_ui)
from choqkit.randgen import random_interval_setfunction, random_step_function

TOL = 1e-9

SQRT_LIKE = [(0.0, 0.0), (0.25, 0.5), (1.0, 1.0)]  # concave through sqrt(1/4)


class TestIntervalSet:
    def test_adjacent_merge(self):
        s = IntervalSet.of([(0.0, 0.5), (0.5, 1.0)])
        assert s.intervals == ((0.0, 1.0),)

    def test_complement(self):
        s = IntervalSet.of([(0.25, 0.75)])
        assert s.complement().intervals == ((0.0, 0.25), (0.75, 1.0))

    def test_measure(self):
        assert IntervalSet.of([(0.1, 0.4)]).measure() == pytest.approx(0.3)

    def test_boolean_algebra_closure(self, rng):
        for _ in range(100):
            a = IntervalSet.of((min(p), max(p)) for p in
                               rng.uniform(0, 1, size=(2, 2)) if p[0] != p[1])
            b = IntervalSet.of((min(p), max(p)) for p in
                               rng.uniform(0, 1, size=(2, 2)) if p[0] != p[1])
            union = a.union(b)
            inter = a.intersection(b)
            assert union.measure() + inter.measure() == pytest.approx(
                a.measure() + b.measure(), abs=TOL)
            sym = a.symmetric_difference(b)
            assert sym.measure() == pytest.approx(
                union.measure() - inter.measure(), abs=TOL)
            assert a.complement().complement().intervals == a.intervals


class TestExtensions:
    def test_concave_ignores_endpoint_flags(self):
        phi = IntervalSetFunction.concave_of_measure(SQRT_LIKE)
        closed = FlaggedSet.of([(0.0, 0.25, True, True)])
        assert extend_ui(phi, closed) == pytest.approx(0.5)
        assert extend_ls(phi, closed) == pytest.approx(0.5)

    def test_point_mass_singleton_gap(self):
        phi = IntervalSetFunction.point_mass(0.5, 2.0)
        singleton = FlaggedSet.of([(0.5, 0.5, True, True)])
        assert extend_ui(phi, singleton) == pytest.approx(2.0)
        assert extend_ls(phi, singleton) == pytest.approx(0.0)

    def test_algebra_sets_have_no_gap(self):
        phi = IntervalSetFunction.point_mass(0.5, 1.0)
        for pairs in ([(0.25, 0.75)], [(0.0, 0.5)], [(0.5, 0.9)], []):
            x = IntervalSet.of(pairs)
            assert extend_ui(phi, x) == extend_ls(phi, x) == phi(x)

    def test_open_interval_left_of_atom(self):
        # (0.3, 0.5) excludes the atom yet cannot be separated from it on
        # the left; [0.3, 0.5) is a superset avoiding 0.5, so ui = 0
        phi = IntervalSetFunction.point_mass(0.5, 1.0)
        x = FlaggedSet.of([(0.3, 0.5, False, False)])
        assert extend_ui(phi, x) == 0.0
        assert extend_ls(phi, x) == 0.0

    def test_open_interval_right_of_atom(self):
        # (0.5, 0.9): every half-open superset must contain 0.5
        phi = IntervalSetFunction.point_mass(0.5, 1.0)
        x = FlaggedSet.of([(0.5, 0.9, False, False)])
        assert extend_ui(phi, x) == 1.0
        assert extend_ls(phi, x) == 0.0

    def test_ui_submodular_on_random_triples(self, rng):
        # submodularity of the upper extension, probed on flagged pairs
        phi = IntervalSetFunction.concave_of_measure(SQRT_LIKE)
        for _ in range(100):
            a, b = sorted(rng.uniform(0, 1, size=2))
            c, d = sorted(rng.uniform(0, 1, size=2))
            if a == b or c == d:
                continue
            x = IntervalSet.of([(a, b)])
            y = IntervalSet.of([(c, d)])
            lhs = extend_ui(phi, x.union(y)) + extend_ui(phi, x.intersection(y))
            rhs = extend_ui(phi, x) + extend_ui(phi, y)
            assert lhs <= rhs + TOL


class TestChoquetInterval:
    def test_identity_measure_is_lebesgue(self, rng):
        phi = IntervalSetFunction.concave_of_measure([(0.0, 0.0), (1.0, 1.0)])
        for _ in range(30):
            f = random_step_function(rng, max_pieces=8)
            exact = sum((b - a) * v for a, b, v in
                        zip(f.breakpoints, f.breakpoints[1:], f.values))
            assert choquet_interval(phi, f) == pytest.approx(exact, abs=1e-8)

    def test_indicator_consistency(self):
        phi = IntervalSetFunction.concave_of_measure(SQRT_LIKE)
        f = StepFunction((0.0, 0.25, 1.0), (1.0, 0.0))
        assert choquet_interval(phi, f) == pytest.approx(0.5)

    def test_point_mass_reads_value_at_atom(self, rng):
        phi = IntervalSetFunction.point_mass(0.5, 1.0)
        for _ in range(30):
            f = random_step_function(rng, max_pieces=10, lo=0.0, hi=2.0)
            assert choquet_interval(phi, f) == pytest.approx(f(0.5), abs=1e-9)

    def test_shift_handles_negative_values(self):
        phi = IntervalSetFunction.point_mass(0.25, 1.0)
        f = StepFunction((0.0, 0.5, 1.0), (-2.0, 1.0))
        assert choquet_interval(phi, f) == pytest.approx(-2.0)

    def test_extension_identities_on_interval_model(self, rng):
        for _ in range(40):
            phi = random_interval_setfunction(rng)
            f = random_step_function(rng, max_pieces=10)
            base = choquet_interval(phi, f)
            full = phi(IntervalSet.full())
            c = float(rng.uniform(0.1, 2.0))
            scaled = StepFunction(f.breakpoints, tuple(c * v for v in f.values))
            assert choquet_interval(phi, scaled) == pytest.approx(c * base,
                                                                  abs=1e-8)
            a = float(rng.uniform(-1.0, 1.0))
            moved = StepFunction(f.breakpoints, tuple(v + a for v in f.values))
            assert choquet_interval(phi, moved) == pytest.approx(
                base + a * full, abs=1e-8)

    def test_subadditivity_concave_of_measure(self, rng):
        phi = IntervalSetFunction.concave_of_measure(SQRT_LIKE)
        for _ in range(40):
            f = random_step_function(rng, max_pieces=6)
            g = random_step_function(rng, max_pieces=6)
            bps = tuple(sorted(set(f.breakpoints) | set(g.breakpoints)))
            mids = [(a + b) / 2 for a, b in zip(bps, bps[1:])]
            combined = StepFunction(bps, tuple(f(m) + g(m) for m in mids))
            assert choquet_interval(phi, combined) <= (
                choquet_interval(phi, f) + choquet_interval(phi, g) + TOL)


class TestAeGap:
    def test_concave_has_no_exceptional_thresholds(self, rng):
        phi = IntervalSetFunction.concave_of_measure(SQRT_LIKE)
        for _ in range(20):
            assert ae_gap(phi, random_step_function(rng, max_pieces=10)) == []

    def test_point_mass_gap_is_finite(self, rng):
        phi = IntervalSetFunction.point_mass(0.37, 1.5)
        for _ in range(20):
            f = random_step_function(rng, max_pieces=10)
            exceptional = ae_gap(phi, f)
            assert len(exceptional) <= len(set(f.values))
            assert all(t in f.values for t in exceptional)

    def test_constant_function(self):
        phi = IntervalSetFunction.point_mass(0.5, 1.0)
        f = StepFunction((0.0, 1.0), (0.7,))
        assert len(ae_gap(phi, f)) <= 1
