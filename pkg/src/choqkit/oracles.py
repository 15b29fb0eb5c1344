"""Independent brute-force oracles used to cross-check the fast routes.

These deliberately avoid the shortcuts taken by the main modules
(local submodularity characterization, single-element-step DP) so that
agreement between the two routes is meaningful evidence.
"""

from __future__ import annotations

from .setfunctions import SetFunction, Verdict


def submodular_by_pairs(phi: SetFunction, tol: float = 1e-9) -> Verdict:
    """Direct O(4^n) check of the defining inequality over all pairs."""
    vals = phi.table()
    size = len(vals)
    for x in range(size):
        for y in range(x + 1, size):
            if vals[x | y] + vals[x & y] > vals[x] + vals[y] + tol:
                return Verdict(False, (x, y))
    return Verdict(True)


def variation_all_predecessors(phi: SetFunction) -> float:
    """O(3^n) chain DP allowing arbitrary (multi-element) chain steps."""
    vals = phi.table()
    size = len(vals)
    table = [0.0] * size
    for mask in range(1, size):
        best = abs(vals[mask] - vals[0])
        sub = (mask - 1) & mask
        while sub:
            cand = table[sub] + abs(vals[mask] - vals[sub])
            if cand > best:
                best = cand
            sub = (sub - 1) & mask
        table[mask] = best
    return table[size - 1]


def chain_variation_sum(phi: SetFunction, chain) -> float:
    """Sum of |phi increments| along an explicit chain of masks."""
    return sum(abs(phi(b) - phi(a)) for a, b in zip(chain, chain[1:]))
