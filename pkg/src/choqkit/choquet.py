"""Choquet extension of a setfunction to real-valued vectors on the ground set.

For f >= 0 the extension integrates phi over the superlevel sets of f;
the integrand is piecewise constant in the threshold, so the integral
is evaluated as an exact finite sum over the level chain.  Vectors
with negative entries are handled by the shift formula
whatphi(f) = whatphi(f + c) - c * phi(J) for any c >= sup|f|.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .setfunctions import PreconditionError, SetFunction


@dataclass(frozen=True)
class BoundedFunction:
    """Real vector f on the ground set; f(x) = values[x]."""

    values: tuple

    def __post_init__(self):
        vals = tuple(float(v) for v in self.values)
        if any(v != v or v in (float("inf"), float("-inf")) for v in vals):
            raise ValueError("values must be finite")
        object.__setattr__(self, "values", vals)

    @classmethod
    def indicator(cls, n: int, mask: int) -> "BoundedFunction":
        return cls(tuple(1.0 if mask >> x & 1 else 0.0 for x in range(n)))

    @property
    def norm(self) -> float:
        """Supremum norm max |f(x)|."""
        return max(abs(v) for v in self.values)

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __getitem__(self, i):
        return self.values[i]


def _values(f) -> tuple:
    if isinstance(f, BoundedFunction):
        return f.values
    return tuple(float(v) for v in f)


@dataclass(frozen=True)
class LevelChain:
    """Distinct values of f in decreasing order with their superlevel masks."""

    thresholds: tuple
    sets: tuple


def level_chain(f) -> LevelChain:
    """Layer-cake data of f: thresholds t_1 > ... > t_k and masks {f >= t_i}."""
    vals = _values(f)
    order = sorted(range(len(vals)), key=lambda x: -vals[x])
    thresholds = []
    sets = []
    mask = 0
    for x in order:
        mask |= 1 << x
        if thresholds and vals[x] == thresholds[-1]:
            sets[-1] = mask
        else:
            thresholds.append(vals[x])
            sets.append(mask)
    return LevelChain(tuple(thresholds), tuple(sets))


def choquet(phi: SetFunction, f, shift: Optional[float] = None) -> float:
    """Choquet extension whatphi(f).

    For nonnegative f this is sum_i (t_i - t_{i+1}) * phi({f >= t_i})
    over the level chain, with t_{k+1} = 0.  Otherwise the value is
    whatphi(f + c) - c * phi(J) with c = max(0, sup|f|) (or the given
    shift, which must dominate sup|f|).
    """
    vals = _values(f)
    if len(vals) != phi.n:
        raise PreconditionError(f"function length {len(vals)} != ground size {phi.n}")
    low = min(vals)
    if shift is not None:
        norm = max(abs(v) for v in vals)
        if shift < norm:
            raise PreconditionError("shift must be at least sup|f|")
        c = float(shift)
    elif low >= 0.0:
        c = 0.0
    else:
        c = max(abs(v) for v in vals)
    order = sorted(range(len(vals)), key=lambda x: -vals[x])
    total = 0.0
    mask = 0
    prev = None
    evaluate = phi._eval
    for x in order:
        value = vals[x] + c
        if prev is not None and value < prev:
            total += (prev - value) * evaluate(mask)
        mask |= 1 << x
        prev = value
    if prev is not None and prev > 0.0:
        total += prev * evaluate(mask)
    if c:
        total -= c * evaluate(phi.ground.full_mask)
    return total
