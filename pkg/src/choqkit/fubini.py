"""Lopsided Fubini inequality on finite probability spaces.

For a nonnegative submodular phi on the column space J, the Choquet
value of the lambda-average of the rows of F is at most the
lambda-average of the row values.  On finite spaces the uniform
continuity hypothesis is automatic (see uniform_continuity_modulus),
so the inequality reduces to subadditivity plus homogeneity; the
Monte Carlo runner demonstrates the law-of-large-numbers construction
behind the general proof.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .choquet import BoundedFunction, choquet
from .setfunctions import PreconditionError, SetFunction, is_submodular
from .variation import total_variation


@dataclass(frozen=True)
class FubiniInstance:
    """Finite probability spaces (I, lambda), (J, pi), matrix F, and phi on J."""

    lam: tuple
    pi: tuple
    F: tuple  # m rows of n reals
    phi: SetFunction
    validated: bool = True

    @classmethod
    def of(cls, lam, pi, F, phi: SetFunction, validate: bool = True,
           tol: float = 1e-9) -> "FubiniInstance":
        lam = tuple(float(v) for v in lam)
        pi = tuple(float(v) for v in pi)
        F = tuple(tuple(float(v) for v in row) for row in F)
        if len(F) != len(lam) or any(len(row) != len(pi) for row in F):
            raise ValueError("F must be an m x n matrix matching lambda and pi")
        if abs(sum(lam) - 1.0) > tol or abs(sum(pi) - 1.0) > tol:
            raise ValueError("lambda and pi must sum to 1")
        if any(v < 0 for v in lam):
            raise ValueError("lambda must be nonnegative")
        if any(v <= 0 for v in pi):
            raise ValueError("pi entries must be positive")
        if phi.n != len(pi):
            raise ValueError("phi ground size must match pi")
        if validate:
            verdict = is_submodular(phi, tol)
            if not verdict:
                raise PreconditionError(
                    f"phi is not submodular (witness {verdict.witness})")
            if min(phi.table()) < -tol:
                raise PreconditionError("phi must be nonnegative")
        return cls(lam, pi, F, phi, validated=validate)

    @property
    def m(self) -> int:
        return len(self.lam)

    @property
    def n(self) -> int:
        return len(self.pi)


def marginal_g(inst: FubiniInstance) -> BoundedFunction:
    """g(y) = sum_x lambda(x) F(x, y), the lambda-average of the rows."""
    g = np.asarray(inst.lam) @ np.asarray(inst.F)
    return BoundedFunction(tuple(g))


@dataclass(frozen=True)
class LopsidedResult:
    lhs: float
    rhs: float
    slack: float
    holds: bool


def lopsided_check(inst: FubiniInstance, tol: float = 1e-9) -> LopsidedResult:
    """whatphi(g) versus the lambda-average of whatphi over the rows."""
    lhs = choquet(inst.phi, marginal_g(inst))
    rhs = sum(w * choquet(inst.phi, row) for w, row in zip(inst.lam, inst.F))
    slack = rhs - lhs
    return LopsidedResult(lhs, rhs, slack, slack >= -tol)


@dataclass(frozen=True)
class LlnRecord:
    k: int
    what_f: float        # whatphi of the empirical average f_k
    running_avg: float   # average of whatphi over the sampled rows
    what_h: float        # whatphi of h_k = g - f_k
    norm_h: float


@dataclass(frozen=True)
class LlnTrace:
    seed: int
    samples: tuple
    records: tuple
    lhs: float
    rhs: float


def lln_run(inst: FubiniInstance, steps: int, seed: int = 0,
            tol: float = 1e-9) -> LlnTrace:
    """Sample rows i.i.d. from lambda and track the empirical averages.

    At every step k the finite subadditivity bound
    whatphi(f_k) <= (1/k) sum_i whatphi(F_{x_i}) is asserted, as is the
    Lipschitz bound |whatphi(h_k)| <= 2 K(phi) ||h_k|| for h_k = g - f_k.
    """
    if steps < 1:
        raise PreconditionError("steps must be >= 1")
    rng = np.random.default_rng(seed)
    samples = rng.choice(inst.m, size=steps, p=np.asarray(inst.lam))
    phi = inst.phi
    rows = [np.asarray(row) for row in inst.F]
    row_values = [choquet(phi, row) for row in inst.F]
    g = np.asarray(inst.lam) @ np.asarray(inst.F)
    variation = total_variation(phi)

    records = []
    running = 0.0
    acc = np.zeros(inst.n)
    for k, x in enumerate(samples, start=1):
        acc += rows[x]
        running += row_values[x]
        f_k = acc / k
        h_k = g - f_k
        what_f = choquet(phi, f_k)
        what_h = choquet(phi, h_k)
        avg = running / k
        if what_f > avg + tol:
            raise AssertionError(
                f"finite subadditivity bound violated at step {k}")
        norm_h = float(np.max(np.abs(h_k)))
        if abs(what_h) > 2.0 * variation * norm_h + tol:
            raise AssertionError(f"Lipschitz bound violated at step {k}")
        records.append(LlnRecord(k, what_f, avg, what_h, norm_h))
    result = lopsided_check(inst, tol)
    return LlnTrace(seed=seed, samples=tuple(int(x) for x in samples),
                    records=tuple(records), lhs=result.lhs, rhs=result.rhs)


def uniform_continuity_modulus(phi: SetFunction, pi,
                               epsilons=None) -> list:
    """Table of (eps, delta): delta = min pi(S sym T) over pairs with
    |phi(S) - phi(T)| >= eps; +inf when no pair qualifies.

    Any delta below min_x pi(x) forces S = T, so on a finite space
    every setfunction is uniformly continuous with respect to pi.
    """
    pi = tuple(float(v) for v in pi)
    if any(v <= 0 for v in pi):
        raise PreconditionError("pi entries must be positive")
    if len(pi) != phi.n:
        raise ValueError("pi length must match the ground set")
    vals = phi.table()
    size = len(vals)
    sym_measure = [sum(w for x, w in enumerate(pi) if mask >> x & 1)
                   for mask in range(size)]
    gaps = []
    for s in range(size):
        for t in range(s + 1, size):
            gaps.append((abs(vals[s] - vals[t]), sym_measure[s ^ t]))
    if epsilons is None:
        distinct = sorted({g for g, _ in gaps if g > 0})
        epsilons = distinct if distinct else [1.0]
    table = []
    for eps in epsilons:
        qualifying = [d for g, d in gaps if g >= eps]
        table.append((eps, min(qualifying) if qualifying else math.inf))
    return table
