"""Uncrossing: turn a weighted set family into a chain with the same sum.

A crossing pair (neither set contains the other) is repeatedly
replaced by its union and intersection.  The pointwise sum
h = sum_i a_i * 1_{H_i} is preserved, the potential sum_i a_i * |H_i|^2
strictly increases, and the procedure stops with a chain.  For a
submodular phi the weighted value sum_i a_i * phi(H_i) never increases
along the way, which certifies whatphi(h) <= sum_i a_i * phi(H_i).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .choquet import BoundedFunction, choquet
from .setfunctions import GroundSet, PreconditionError, SetFunction


@dataclass(frozen=True)
class WeightedFamily:
    """Multiset of subsets with positive integer multiplicities."""

    ground: GroundSet
    entries: tuple  # sorted ((mask, multiplicity), ...), masks distinct

    @classmethod
    def of(cls, ground: GroundSet, entries) -> "WeightedFamily":
        merged = {}
        for mask, mult in entries:
            ground.check_mask(mask)
            mult = int(mult)
            if mult < 1:
                raise ValueError("multiplicities must be positive integers")
            merged[mask] = merged.get(mask, 0) + mult
        return cls(ground, tuple(sorted(merged.items())))

    @property
    def total_multiplicity(self) -> int:
        return sum(mult for _, mult in self.entries)

    def is_chain(self) -> bool:
        masks = sorted((mask for mask, _ in self.entries),
                       key=lambda m: bin(m).count("1"))
        return all(a & b == a for a, b in zip(masks, masks[1:]))

    def potential(self) -> int:
        return sum(mult * bin(mask).count("1") ** 2 for mask, mult in self.entries)

    def phi_sum(self, phi: SetFunction) -> float:
        return sum(mult * phi(mask) for mask, mult in self.entries)


def family_sum(family: WeightedFamily) -> BoundedFunction:
    """Pointwise h(x) = total multiplicity of entries containing x."""
    n = family.ground.n
    h = [0.0] * n
    for mask, mult in family.entries:
        for x in family.ground.elements(mask):
            h[x] += mult
    return BoundedFunction(tuple(h))


@dataclass(frozen=True)
class UncrossStep:
    pair: tuple  # the two crossing masks chosen
    before: tuple  # family entries before the step
    after: tuple
    potential_before: int
    potential_after: int
    phi_sum_before: Optional[float] = None
    phi_sum_after: Optional[float] = None


@dataclass(frozen=True)
class UncrossTrace:
    initial: WeightedFamily
    steps: tuple
    final: WeightedFamily


def _first_crossing(entries):
    for i, (a, _) in enumerate(entries):
        for b, _ in entries[i + 1:]:
            common = a & b
            if common != a and common != b:
                return a, b
    return None


def uncross(family: WeightedFamily, phi: Optional[SetFunction] = None) -> UncrossTrace:
    """Run the exchange procedure to completion, recording every step.

    Pair selection is the first crossing pair in sorted entry order;
    any order terminates, this one makes traces reproducible.
    """
    if not family.entries:
        raise PreconditionError("family must be nonempty")
    current = family
    steps = []
    budget = family.total_multiplicity * family.ground.n ** 2 + 1
    for _ in range(budget):
        pair = _first_crossing(current.entries)
        if pair is None:
            break
        a, b = pair
        replaced = []
        for mask, mult in current.entries:
            if mask in (a, b):
                if mult > 1:
                    replaced.append((mask, mult - 1))
            else:
                replaced.append((mask, mult))
        replaced.extend([(a | b, 1), (a & b, 1)])
        nxt = WeightedFamily.of(current.ground, replaced)
        steps.append(UncrossStep(
            pair=(a, b),
            before=current.entries,
            after=nxt.entries,
            potential_before=current.potential(),
            potential_after=nxt.potential(),
            phi_sum_before=None if phi is None else current.phi_sum(phi),
            phi_sum_after=None if phi is None else nxt.phi_sum(phi),
        ))
        current = nxt
    else:
        raise AssertionError("uncrossing exceeded its termination budget")
    return UncrossTrace(initial=family, steps=tuple(steps), final=current)


def certify_chain_equality(phi: SetFunction, chain: WeightedFamily, tol: float = 1e-9):
    """Check whatphi(h) = sum_i a_i * phi(H_i) for a chain family.

    Holds for any setfunction with phi(empty) = 0, submodular or not:
    the chain sets are exactly the level sets of h.
    """
    if not chain.is_chain():
        raise PreconditionError("family is not a chain")
    lhs = choquet(phi, family_sum(chain))
    rhs = chain.phi_sum(phi)
    return lhs, rhs, abs(lhs - rhs) <= tol
