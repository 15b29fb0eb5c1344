"""Total variation over chains and the canonical increasing decomposition.

The suprema over chains from the empty set are computed by dynamic
programming over the subset lattice with single-element steps.
Refining a chain never decreases either objective (|a+b| <= |a| + |b|
and |a+b|_+ <= |a|_+ + |b|_+), so the restriction to maximal chains
is lossless; tests validate this against an all-predecessor oracle.
"""

from __future__ import annotations

from dataclasses import dataclass

from .setfunctions import PreconditionError, SetFunction, is_submodular


def _single_step_dp(vals, positive_part: bool):
    """V(S) = max_x V(S \\ {x}) + w(phi(S) - phi(S\\{x})) over the lattice."""
    size = len(vals)
    table = [0.0] * size
    for mask in range(1, size):
        best = None
        rest = mask
        while rest:
            bit = rest & -rest
            rest ^= bit
            delta = vals[mask] - vals[mask ^ bit]
            if positive_part:
                step = delta if delta > 0.0 else 0.0
            else:
                step = abs(delta)
            cand = table[mask ^ bit] + step
            if best is None or cand > best:
                best = cand
        table[mask] = best
    return table


def total_variation(phi: SetFunction) -> float:
    """K(phi): largest sum of |increments| over chains from empty to J."""
    vals = phi.table()
    return _single_step_dp(vals, positive_part=False)[-1]


def max_variation_chain(phi: SetFunction) -> list:
    """One chain of masks from 0 to J attaining K(phi)."""
    vals = phi.table()
    table = _single_step_dp(vals, positive_part=False)
    chain = []
    mask = phi.ground.full_mask
    while mask:
        chain.append(mask)
        rest = mask
        best_bit, best = None, None
        while rest:
            bit = rest & -rest
            rest ^= bit
            cand = table[mask ^ bit] + abs(vals[mask] - vals[mask ^ bit])
            if best is None or cand > best:
                best, best_bit = cand, bit
        mask ^= best_bit
    chain.append(0)
    chain.reverse()
    return chain


def submodular_variation_closed_form(phi: SetFunction, tol: float = 1e-9) -> float:
    """K(phi) = 2 * max_S phi(S) - phi(J), valid for submodular phi."""
    verdict = is_submodular(phi, tol)
    if not verdict:
        raise PreconditionError(f"phi is not submodular (witness {verdict.witness})")
    vals = phi.table()
    return 2.0 * max(vals) - vals[-1]


@dataclass(frozen=True)
class DecompositionResult:
    """phi = mu - nu with mu, nu increasing, both bounded by K(phi)."""

    mu: tuple
    nu: tuple
    variation: float


def canonical_decomposition(phi: SetFunction) -> DecompositionResult:
    """Chain-wise positive/negative increment suprema ending exactly at S."""
    vals = phi.table()
    mu = _single_step_dp(vals, positive_part=True)
    nu = [m - v for m, v in zip(mu, vals)]
    variation = _single_step_dp(vals, positive_part=False)[-1]
    return DecompositionResult(tuple(mu), tuple(nu), variation)


def ls_decomposition(phi: SetFunction, tol: float = 1e-9):
    """Split submodular phi into psi(S) = max_{Y subseteq S} phi(Y) plus a rest.

    Returns (psi, remainder) as value tables; psi is increasing and the
    remainder is decreasing whenever phi is submodular, which is checked.
    """
    verdict = is_submodular(phi, tol)
    if not verdict:
        raise PreconditionError(f"phi is not submodular (witness {verdict.witness})")
    vals = phi.table()
    psi = list(vals)
    for mask in range(1, len(vals)):
        rest = mask
        while rest:
            bit = rest & -rest
            rest ^= bit
            if psi[mask ^ bit] > psi[mask]:
                psi[mask] = psi[mask ^ bit]
    remainder = [v - p for v, p in zip(vals, psi)]
    n = phi.n
    for mask in range(len(vals)):
        for x in range(n):
            if not mask >> x & 1:
                bigger = mask | 1 << x
                assert psi[mask] <= psi[bigger] + tol, "psi not increasing"
                assert remainder[mask] >= remainder[bigger] - tol, \
                    "remainder not decreasing"
    return tuple(psi), tuple(remainder)
