"""End-to-end invariant suite over generated instances.

Each criterion draws its own seeded instances, so a run is fully
reproducible from the base seed.  The CLI `selftest` subcommand and
the acceptance tests both call into this module.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

import numpy as np

from . import oracles, randgen
from .choquet import BoundedFunction, choquet
from .fubini import lln_run, lopsided_check
from .intervals import ae_gap, choquet_interval
from .setfunctions import SetFunction, conjugate, is_submodular
from .uncrossing import certify_chain_equality, family_sum, uncross
from .variation import (canonical_decomposition, submodular_variation_closed_form,
                        total_variation)

TOL = 1e-9


@dataclass
class CriterionResult:
    index: int
    name: str
    passed: bool
    detail: str
    seconds: float

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return (f"criterion {self.index} [{status}] {self.name}: "
                f"{self.detail} ({self.seconds:.1f}s)")


def _timed(index, name, fn):
    start = time.perf_counter()
    try:
        passed, detail = fn()
    except AssertionError as exc:
        passed, detail = False, str(exc)
    return CriterionResult(index, name, passed, detail,
                           time.perf_counter() - start)


def criterion_1(seed: int = 1) -> CriterionResult:
    """Convexity iff submodularity on random table setfunctions."""

    def run():
        rng = np.random.default_rng(seed)
        submodular_seen = nonsub_seen = 0
        for i in range(500):
            n = int(rng.integers(3, 7))
            if i % 2 == 0:
                phi = randgen.random_table_setfunction(rng, n)
            else:
                phi = randgen.random_submodular_setfunction(rng, n).as_table()
            verdict = is_submodular(phi)
            if verdict:
                submodular_seen += 1
                for _ in range(100):
                    f = np.array(randgen.random_bounded_function(rng, n))
                    g = np.array(randgen.random_bounded_function(rng, n))
                    lhs = choquet(phi, f + g)
                    rhs = choquet(phi, f) + choquet(phi, g)
                    assert lhs <= rhs + TOL, \
                        f"subadditivity failed for submodular phi: {lhs} > {rhs}"
            else:
                nonsub_seen += 1
                s, t = verdict.witness
                violation = phi(s | t) + phi(s & t) - phi(s) - phi(t)
                assert violation > 0, "witness does not violate the inequality"
                ind_s = BoundedFunction.indicator(n, s)
                ind_t = BoundedFunction.indicator(n, t)
                both = np.array(ind_s.values) + np.array(ind_t.values)
                gap = choquet(phi, both) - choquet(phi, ind_s) - choquet(phi, ind_t)
                assert gap >= violation - TOL, \
                    f"witness indicators under-violate: {gap} < {violation}"
        return True, (f"{submodular_seen} submodular / {nonsub_seen} "
                      f"non-submodular instances checked")

    return _timed(1, "convexity iff submodularity", run)


def criterion_2(seed: int = 2) -> CriterionResult:
    """Variation DP vs the submodular closed form and the O(3^n) oracle."""

    def run():
        rng = np.random.default_rng(seed)
        oracle_checked = 0
        for _ in range(200):
            n = int(rng.integers(3, 11))
            phi = randgen.random_submodular_setfunction(
                rng, n, families=("cut", "coverage", "concave-of-modular"))
            dp = total_variation(phi)
            closed = submodular_variation_closed_form(phi)
            assert abs(dp - closed) <= TOL, f"DP {dp} != closed form {closed}"
            if n <= 6:
                assert abs(dp - oracles.variation_all_predecessors(phi)) <= TOL
                oracle_checked += 1
        # the all-predecessor agreement also on sign-mixed tables
        for _ in range(50):
            n = int(rng.integers(3, 7))
            phi = randgen.random_table_setfunction(rng, n)
            assert abs(total_variation(phi)
                       - oracles.variation_all_predecessors(phi)) <= TOL
            oracle_checked += 1
        return True, f"200 closed-form checks, {oracle_checked} oracle checks"

    return _timed(2, "variation closed form", run)


def criterion_3(seed: int = 3) -> CriterionResult:
    """Canonical decomposition invariants and the two-route extension value."""

    def run():
        rng = np.random.default_rng(seed)
        for _ in range(200):
            n = int(rng.integers(3, 8))
            phi = randgen.random_table_setfunction(rng, n)
            dec = canonical_decomposition(phi)
            size = 1 << n
            for mask in range(size):
                assert abs(dec.mu[mask] - dec.nu[mask] - phi(mask)) <= TOL
                assert dec.mu[mask] <= dec.variation + TOL
                assert dec.nu[mask] <= dec.variation + TOL
                for x in range(n):
                    if not mask >> x & 1:
                        up = mask | 1 << x
                        assert dec.mu[mask] <= dec.mu[up] + TOL, "mu not increasing"
                        assert dec.nu[mask] <= dec.nu[up] + TOL, "nu not increasing"
            mu = SetFunction.from_table(dec.mu)
            nu = SetFunction.from_table(dec.nu)
            for _ in range(50):
                f = randgen.random_bounded_function(rng, n)
                direct = choquet(phi, f)
                split = choquet(mu, f) - choquet(nu, f)
                assert abs(direct - split) <= TOL, \
                    f"decomposition route disagrees: {direct} vs {split}"
        return True, "200 decompositions, 50 functions each"

    return _timed(3, "canonical decomposition", run)


def criterion_4(seed: int = 4) -> CriterionResult:
    """Homogeneity, translation, reflection, linearity, shift, Lipschitz."""

    def run():
        rng = np.random.default_rng(seed)
        for _ in range(1000):
            n = int(rng.integers(3, 7))
            phi = randgen.random_table_setfunction(rng, n)
            psi = randgen.random_table_setfunction(rng, n)
            f = np.array(randgen.random_bounded_function(rng, n))
            g = np.array(randgen.random_bounded_function(rng, n))
            a = float(rng.uniform(-2.0, 2.0))
            c = float(rng.uniform(0.1, 3.0))
            full = phi.ground.full_mask
            base = choquet(phi, f)
            assert abs(choquet(phi, c * f) - c * base) <= TOL
            assert abs(choquet(phi, f + a) - (base + a * phi(full))) <= TOL
            assert abs(choquet(phi, -f) + choquet(conjugate(phi), f)) <= TOL
            combo = SetFunction.from_table(
                [a * phi(m) + c * psi(m) for m in range(full + 1)])
            assert abs(choquet(combo, f)
                       - (a * base + c * choquet(psi, f))) <= TOL
            norm = float(np.max(np.abs(f)))
            shifted = choquet(phi, f, shift=norm + c)
            assert abs(shifted - base) <= TOL, "shift parameter leaked"
            lip = 2.0 * total_variation(phi) * float(np.max(np.abs(f - g)))
            assert abs(base - choquet(phi, g)) <= lip + TOL
        return True, "1000 draws, six identities each"

    return _timed(4, "extension identities", run)


def criterion_5(seed: int = 5) -> CriterionResult:
    """Uncrossing invariants, termination, and chain equality."""

    def run():
        rng = np.random.default_rng(seed)
        for _ in range(500):
            n = int(rng.integers(2, 11))
            family = randgen.random_weighted_family(rng, n, max_total=20)
            sub = randgen.random_submodular_setfunction(rng, n).as_table()
            trace = uncross(family, sub)
            h0 = family_sum(family).values
            assert len(trace.steps) <= family.total_multiplicity * n * n
            prev_phi = None
            for step in trace.steps:
                ground = family.ground
                before = type(family)(ground, step.before)
                after = type(family)(ground, step.after)
                assert family_sum(before).values == h0
                assert family_sum(after).values == h0
                assert step.potential_after > step.potential_before
                assert step.phi_sum_after <= step.phi_sum_before + TOL, \
                    "phi-sum increased under a submodular setfunction"
                prev_phi = step.phi_sum_after
            assert trace.final.is_chain()
            assert family_sum(trace.final).values == h0
            if prev_phi is not None:
                lhs, rhs, ok = certify_chain_equality(sub, trace.final)
                assert ok and lhs <= trace.steps[0].phi_sum_before + TOL
            arbitrary = randgen.random_table_setfunction(rng, n)
            lhs, rhs, ok = certify_chain_equality(arbitrary, trace.final)
            assert ok, f"chain equality failed for arbitrary phi: {lhs} vs {rhs}"
        return True, "500 families uncrossed and certified"

    return _timed(5, "uncrossing", run)


def criterion_6(seed: int = 6) -> CriterionResult:
    """Interval algebra: a.e. agreement of the ui/ls extensions."""

    def run():
        rng = np.random.default_rng(seed)
        for _ in range(200):
            phi = randgen.random_interval_setfunction(rng)
            f = randgen.random_step_function(rng, max_pieces=20)
            exceptional = ae_gap(phi, f)
            assert len(exceptional) <= len(set(f.values))
            ui = choquet_interval(phi, f, extension="ui")
            ls = choquet_interval(phi, f, extension="ls")
            assert abs(ui - ls) <= TOL
        return True, "200 (phi, f) pairs, exceptional sets all finite"

    return _timed(6, "interval set-algebra", run)


def criterion_7(seed: int = 7) -> CriterionResult:
    """Lopsided Fubini: exact inequality plus Monte Carlo traces."""

    def run():
        rng = np.random.default_rng(seed)
        for _ in range(1000):
            m = int(rng.integers(2, 9))
            n = int(rng.integers(2, 9))
            inst = randgen.random_fubini_instance(rng, m, n)
            result = lopsided_check(inst)
            assert result.slack >= -TOL, f"lopsided inequality violated: {result}"
        gaps = []
        for run_seed in range(20):
            inst = randgen.random_fubini_instance(
                np.random.default_rng(seed + 1000 + run_seed), 6, 6)
            inst = type(inst).of(inst.lam, inst.pi, inst.F,
                                 inst.phi.as_table())
            trace = lln_run(inst, steps=10_000, seed=run_seed)
            final = trace.records[-1]
            gaps.append(abs(final.running_avg - trace.rhs))
        detail = ("1000 exact instances; 20 traces of 10^4 steps; "
                  "running-average gaps: "
                  + ", ".join(f"{g:.4f}" for g in gaps))
        return True, detail

    return _timed(7, "lopsided Fubini", run)


CRITERIA = (criterion_1, criterion_2, criterion_3, criterion_4,
            criterion_5, criterion_6, criterion_7)


def run_all(seed: int = 0, echo=print) -> list:
    results = []
    for offset, criterion in enumerate(CRITERIA, start=1):
        result = criterion(seed + offset)
        results.append(result)
        if echo:
            echo(result.line())
    return results
