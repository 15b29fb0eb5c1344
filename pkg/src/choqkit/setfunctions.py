"""Setfunctions on a finite ground set, with bitmask subsets.

A subset of the ground set {0, ..., n-1} is an n-bit integer mask
(bit x set <=> element x in the subset).  All evaluation oracles are
pure and total on the power set; instances are immutable after
construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

TOL = 1e-9


class PreconditionError(ValueError):
    """An operation was called outside its stated domain."""


@dataclass(frozen=True)
class GroundSet:
    """Finite ground set {0, ..., n-1}, optionally with element labels."""

    n: int
    labels: Optional[tuple] = None

    def __post_init__(self):
        if not 1 <= self.n <= 24:
            raise ValueError(f"ground set size must be in 1..24, got {self.n}")
        if self.labels is not None:
            object.__setattr__(self, "labels", tuple(self.labels))
            if len(self.labels) != self.n:
                raise ValueError("labels length must equal n")

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def check_mask(self, mask: int) -> int:
        if not 0 <= mask <= self.full_mask:
            raise PreconditionError(f"mask {mask} out of range for n={self.n}")
        return mask

    def elements(self, mask: int):
        """Yield the elements of a subset mask in increasing order."""
        x = 0
        while mask:
            if mask & 1:
                yield x
            mask >>= 1
            x += 1

    def mask_of(self, elements) -> int:
        mask = 0
        for x in elements:
            if not 0 <= x < self.n:
                raise PreconditionError(f"element {x} out of range for n={self.n}")
            mask |= 1 << x
        return mask

    def format_mask(self, mask: int) -> str:
        if mask == 0:
            return "{}"
        names = self.labels or [str(x) for x in range(self.n)]
        return "{" + ",".join(names[x] for x in self.elements(mask)) + "}"


def _concave_validate(breakpoints):
    """Validate a piecewise-linear concave g with g(0)=0; return point list."""
    pts = [(float(t), float(v)) for t, v in breakpoints]
    if not pts or pts[0] != (0.0, 0.0):
        raise ValueError("breakpoint list must start with (0, 0)")
    slopes = []
    for (t0, v0), (t1, v1) in zip(pts, pts[1:]):
        if t1 <= t0:
            raise ValueError("breakpoint abscissae must be strictly increasing")
        slopes.append((v1 - v0) / (t1 - t0))
    for s0, s1 in zip(slopes, slopes[1:]):
        if s1 > s0 + TOL:
            raise ValueError("breakpoints do not describe a concave function")
    return pts


def piecewise_linear(pts, t: float) -> float:
    """Evaluate the piecewise-linear function through pts, extended linearly."""
    if t <= pts[0][0]:
        return pts[0][1]
    for (t0, v0), (t1, v1) in zip(pts, pts[1:]):
        if t <= t1:
            return v0 + (v1 - v0) * (t - t0) / (t1 - t0)
    if len(pts) == 1:
        return pts[0][1]
    # extend with the last slope
    (t0, v0), (t1, v1) = pts[-2], pts[-1]
    return v1 + (v1 - v0) / (t1 - t0) * (t - t1)


class SetFunction:
    """Evaluation oracle phi: 2^J -> R with phi(empty) = 0.

    Instances are either table-backed (explicit value per mask) or
    generated by a standard family (cut, coverage, matroid rank,
    modular, concave-of-modular).  Construction rejects payloads with
    phi(empty) != 0 instead of silently re-normalizing.
    """

    __slots__ = ("ground", "kind", "payload", "_eval")

    def __init__(self, ground: GroundSet, kind: str, payload, evaluator):
        self.ground = ground
        self.kind = kind
        self.payload = payload
        self._eval = evaluator
        if abs(evaluator(0)) > 0.0:
            raise PreconditionError("setfunction must satisfy phi(empty) = 0")

    # ---- constructors ------------------------------------------------

    @classmethod
    def from_table(cls, values: Sequence[float], labels=None) -> "SetFunction":
        values = tuple(float(v) for v in values)
        size = len(values)
        n = size.bit_length() - 1
        if size != 1 << n or n < 1:
            raise ValueError("table length must be 2^n with n >= 1")
        if values[0] != 0.0:
            raise PreconditionError("table[0] must be 0 (phi(empty) = 0)")
        return cls(GroundSet(n, labels), "table", {"values": values},
                   values.__getitem__)

    @classmethod
    def cut(cls, n: int, edges) -> "SetFunction":
        """Weighted cut function: total weight of edges leaving S."""
        ground = GroundSet(n)
        edata = []
        for u, v, *w in edges:
            weight = float(w[0]) if w else 1.0
            if u == v:
                raise ValueError("loops have no cut contribution; remove them")
            edata.append((ground.check_mask(1 << u) | ground.check_mask(1 << v),
                          1 << u, weight))
        edata = tuple(edata)

        def evaluate(mask: int) -> float:
            total = 0.0
            for pair, one_end, weight in edata:
                hit = mask & pair
                if hit != 0 and hit != pair:
                    total += weight
            return total

        return cls(ground, "cut", {"edges": tuple((u, v, float(w[0]) if w else 1.0)
                                                  for u, v, *w in edges)}, evaluate)

    @classmethod
    def coverage(cls, covers: Sequence[Sequence[int]],
                 item_weights: Sequence[float]) -> "SetFunction":
        """Weighted coverage: weight of the union of items covered by S."""
        n = len(covers)
        ground = GroundSet(n)
        weights = tuple(float(w) for w in item_weights)
        if any(w < 0 for w in weights):
            raise ValueError("item weights must be nonnegative")
        item_masks = []
        for cover in covers:
            m = 0
            for item in cover:
                if not 0 <= item < len(weights):
                    raise ValueError(f"item {item} out of range")
                m |= 1 << item
            item_masks.append(m)
        item_masks = tuple(item_masks)

        def evaluate(mask: int) -> float:
            covered = 0
            for x in ground.elements(mask):
                covered |= item_masks[x]
            total = 0.0
            i = 0
            while covered:
                if covered & 1:
                    total += weights[i]
                covered >>= 1
                i += 1
            return total

        payload = {"covers": tuple(tuple(c) for c in covers), "item_weights": weights}
        return cls(ground, "coverage", payload, evaluate)

    @classmethod
    def uniform_matroid(cls, n: int, rank: int) -> "SetFunction":
        if not 0 <= rank <= n:
            raise ValueError("rank must lie in 0..n")
        ground = GroundSet(n)
        payload = {"matroid": "uniform", "rank": rank}
        return cls(ground, "matroid-rank", payload,
                   lambda mask: float(min(bin(mask).count("1"), rank)))

    @classmethod
    def partition_matroid(cls, blocks: Sequence[Sequence[int]],
                          capacities: Sequence[int]) -> "SetFunction":
        elems = [x for block in blocks for x in block]
        n = len(elems)
        if sorted(elems) != list(range(n)):
            raise ValueError("blocks must partition 0..n-1")
        if len(capacities) != len(blocks):
            raise ValueError("one capacity per block")
        ground = GroundSet(n)
        block_masks = tuple(ground.mask_of(b) for b in blocks)
        caps = tuple(int(c) for c in capacities)

        def evaluate(mask: int) -> float:
            return float(sum(min(bin(mask & bm).count("1"), c)
                             for bm, c in zip(block_masks, caps)))

        payload = {"matroid": "partition",
                   "blocks": tuple(tuple(b) for b in blocks),
                   "capacities": caps}
        return cls(ground, "matroid-rank", payload, evaluate)

    @classmethod
    def modular(cls, weights: Sequence[float]) -> "SetFunction":
        weights = tuple(float(w) for w in weights)
        ground = GroundSet(len(weights))

        def evaluate(mask: int) -> float:
            return sum(weights[x] for x in ground.elements(mask))

        return cls(ground, "modular", {"weights": weights}, evaluate)

    @classmethod
    def concave_of_modular(cls, weights: Sequence[float],
                           breakpoints) -> "SetFunction":
        """phi(S) = g(sum of weights over S) for concave g with g(0)=0."""
        weights = tuple(float(w) for w in weights)
        if any(w < 0 for w in weights):
            raise ValueError("weights must be nonnegative for concave composition")
        pts = _concave_validate(breakpoints)
        ground = GroundSet(len(weights))

        def evaluate(mask: int) -> float:
            return piecewise_linear(pts, sum(weights[x] for x in ground.elements(mask)))

        payload = {"weights": weights, "breakpoints": tuple(pts)}
        return cls(ground, "concave-of-modular", payload, evaluate)

    # ---- evaluation --------------------------------------------------

    def __call__(self, mask: int) -> float:
        self.ground.check_mask(mask)
        return self._eval(mask)

    @property
    def n(self) -> int:
        return self.ground.n

    def table(self) -> list:
        """Materialize all 2^n values (exponential; desk scale only)."""
        return [self._eval(mask) for mask in range(1 << self.n)]

    def as_table(self) -> "SetFunction":
        if self.kind == "table":
            return self
        return SetFunction.from_table(self.table(), labels=self.ground.labels)


# ---- structural predicates -------------------------------------------


@dataclass(frozen=True)
class Verdict:
    """Outcome of a structural predicate, with a violating pair on failure."""

    holds: bool
    witness: Optional[tuple] = None

    def __bool__(self) -> bool:
        return self.holds


def is_submodular(phi: SetFunction, tol: float = TOL) -> Verdict:
    """Check phi(X u Y) + phi(X n Y) <= phi(X) + phi(Y) for all X, Y.

    Uses the local exchange characterization over pairs of elements
    outside a common base set; a reported witness (X, Y) violates the
    global inequality directly.
    """
    n = phi.n
    vals = phi.table()
    for base in range(1 << n):
        outside = [x for x in range(n) if not base >> x & 1]
        for i, x in enumerate(outside):
            bx = base | 1 << x
            for y in outside[i + 1:]:
                by = base | 1 << y
                if vals[bx | by] + vals[base] > vals[bx] + vals[by] + tol:
                    return Verdict(False, (bx, by))
    return Verdict(True)


def is_increasing(phi: SetFunction, tol: float = TOL) -> Verdict:
    """Check phi(S) <= phi(T) whenever S is a subset of T."""
    n = phi.n
    vals = phi.table()
    for mask in range(1 << n):
        for x in range(n):
            if not mask >> x & 1:
                bigger = mask | 1 << x
                if vals[mask] > vals[bigger] + tol:
                    return Verdict(False, (mask, bigger))
    return Verdict(True)


def is_modular(phi: SetFunction, tol: float = TOL) -> Verdict:
    """Check that the submodular inequality holds with equality both ways."""
    n = phi.n
    vals = phi.table()
    for base in range(1 << n):
        outside = [x for x in range(n) if not base >> x & 1]
        for i, x in enumerate(outside):
            bx = base | 1 << x
            for y in outside[i + 1:]:
                by = base | 1 << y
                if abs(vals[bx | by] + vals[base] - vals[bx] - vals[by]) > tol:
                    return Verdict(False, (bx, by))
    return Verdict(True)


def conjugate(phi: SetFunction) -> SetFunction:
    """Table-backed phi*(X) = phi(J) - phi(J \\ X)."""
    full = phi.ground.full_mask
    vals = phi.table()
    top = vals[full]
    return SetFunction.from_table([top - vals[full ^ mask] for mask in range(full + 1)],
                                  labels=phi.ground.labels)


# ---- JSON schema -----------------------------------------------------


def setfunction_to_json(phi: SetFunction) -> dict:
    payload = phi.payload
    out = dict(payload)
    # tuples -> lists for JSON friendliness
    for key, value in out.items():
        if isinstance(value, tuple):
            out[key] = [list(v) if isinstance(v, tuple) else v for v in value]
    return {"n": phi.n, "kind": phi.kind, "payload": out}


def setfunction_from_json(obj: dict) -> SetFunction:
    try:
        n = int(obj["n"])
        kind = obj["kind"]
        payload = obj["payload"]
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed setfunction object: {exc}") from exc
    if kind == "table":
        phi = SetFunction.from_table(payload["values"])
        if phi.n != n:
            raise ValueError("table length inconsistent with n")
        return phi
    if kind == "cut":
        return SetFunction.cut(n, payload["edges"])
    if kind == "coverage":
        return SetFunction.coverage(payload["covers"], payload["item_weights"])
    if kind == "matroid-rank":
        if payload["matroid"] == "uniform":
            return SetFunction.uniform_matroid(n, payload["rank"])
        if payload["matroid"] == "partition":
            return SetFunction.partition_matroid(payload["blocks"],
                                                 payload["capacities"])
        raise ValueError(f"unknown matroid family {payload['matroid']!r}")
    if kind == "modular":
        return SetFunction.modular(payload["weights"])
    if kind == "concave-of-modular":
        return SetFunction.concave_of_modular(payload["weights"],
                                              payload["breakpoints"])
    raise ValueError(f"unknown setfunction kind {kind!r}")
