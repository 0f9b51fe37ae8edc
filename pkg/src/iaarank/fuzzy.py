"""Aggregated fuzzy numbers built from interval sets.

Membership at x is the fraction of source intervals containing x, so the
membership function is piecewise constant: it steps at interval bounds and
can carry isolated spikes where point coverage exceeds the surrounding
plateaus (several intervals sharing a bound, or point intervals). The
canonical representation stores one (left, right, height) region per
constant-membership stretch plus zero-width line regions for the spikes,
ordered by position. Membership is recovered from the region list by taking
the maximum height over regions containing x.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .errors import ScaleMismatch
from .intervals import IntervalSet, ScaleConfig


@dataclass(frozen=True)
class Region:
    """Constant-membership region; left == right is a line (spike) region."""

    left: float
    right: float
    height: float

    def __post_init__(self):
        object.__setattr__(self, "left", float(self.left))
        object.__setattr__(self, "right", float(self.right))
        object.__setattr__(self, "height", float(self.height))
        if self.left > self.right:
            raise ValueError(f"region left {self.left} exceeds right {self.right}")
        if not 0 < self.height <= 1:
            raise ValueError(f"region height must be in (0, 1], got {self.height}")

    @property
    def is_line(self) -> bool:
        return self.left == self.right

    @property
    def width(self) -> float:
        return self.right - self.left


def membership_at(interval_set: IntervalSet, x: float) -> float:
    """Fraction of the set's intervals containing x (direct count)."""
    hits = 0
    for iv in interval_set.intervals:
        if iv.left <= x <= iv.right:
            hits += 1
    return hits / interval_set.n


def _assemble_regions(
    xs: Sequence[float],
    point_heights: Sequence[float],
    segment_heights: Sequence[float],
) -> tuple[Region, ...]:
    """Emit the canonical region list from a sampled membership profile.

    xs are the sorted breakpoints; point_heights the membership at each
    breakpoint; segment_heights the membership on each open segment between
    consecutive breakpoints. A line region is emitted only where the point
    membership exceeds both neighbouring segment heights (missing segments
    count as zero), so redundant spikes vanish. Adjacent equal-height
    segments merge when the membership at their shared breakpoint equals
    that height, which keeps the list maximal.
    """
    regions: list[Region] = []
    last = len(xs) - 1
    for i, x in enumerate(xs):
        left_h = segment_heights[i - 1] if i > 0 else 0.0
        right_h = segment_heights[i] if i < last else 0.0
        point = point_heights[i]
        if point > left_h and point > right_h:
            regions.append(Region(x, x, point))
        if i < last and segment_heights[i] > 0:
            regions.append(Region(x, xs[i + 1], segment_heights[i]))

    point_at = dict(zip(xs, point_heights))
    merged: list[Region] = []
    for region in regions:
        previous = merged[-1] if merged else None
        if (
            previous is not None
            and not previous.is_line
            and not region.is_line
            and previous.right == region.left
            and previous.height == region.height
            and point_at.get(region.left) == region.height
        ):
            merged[-1] = Region(previous.left, region.right, region.height)
        else:
            merged.append(region)
    return tuple(merged)


def _profile_regions(
    breakpoints: Sequence[float], mu: Callable[[float], float]
) -> tuple[Region, ...]:
    xs = list(breakpoints)
    point_heights = [mu(x) for x in xs]
    segment_heights = [mu((xs[i] + xs[i + 1]) / 2) for i in range(len(xs) - 1)]
    return _assemble_regions(xs, point_heights, segment_heights)


@dataclass(frozen=True)
class FuzzyNumber:
    """Piecewise-constant fuzzy number in canonical region-list form.

    Retains the sorted deduplicated source interval bounds: similarity
    measures evaluate on those, not on region bounds.
    """

    regions: tuple[Region, ...]
    endpoints: tuple[float, ...]
    n: int
    scale: ScaleConfig
    label: str = ""

    def __post_init__(self):
        object.__setattr__(self, "regions", tuple(self.regions))
        object.__setattr__(self, "endpoints", tuple(float(x) for x in self.endpoints))
        if not self.regions:
            raise ValueError("a fuzzy number needs at least one region")
        ordered = all(
            (a.left, a.right) <= (b.left, b.right)
            for a, b in zip(self.regions, self.regions[1:])
        )
        if not ordered:
            raise ValueError("regions must be sorted by position")
        previous_segment_right = None
        for region in self.regions:
            if region.is_line:
                continue
            if previous_segment_right is not None and region.left < previous_segment_right:
                raise ValueError("segment regions must have disjoint interiors")
            previous_segment_right = region.right
        object.__setattr__(self, "_lefts", tuple(r.left for r in self.regions))

    @property
    def support_min(self) -> float:
        return self.regions[0].left

    @property
    def support_max(self) -> float:
        return max(r.right for r in self.regions)

    def membership(self, x: float) -> float:
        """Maximum region height at x; 0 outside every region."""
        index = bisect_right(self._lefts, x)
        best = 0.0
        for i in range(index - 1, -1, -1):
            region = self.regions[i]
            if region.right >= x:
                if region.height > best:
                    best = region.height
            elif not region.is_line:
                # A segment entirely left of x shields all earlier regions.
                break
        return best

    def to_dict(self) -> dict:
        return {
            "label": self.label,
            "n": self.n,
            "regions": [[r.left, r.right, r.height] for r in self.regions],
            "endpoints": list(self.endpoints),
        }

    @classmethod
    def from_dict(cls, payload: dict, scale: ScaleConfig) -> FuzzyNumber:
        regions = tuple(Region(l, r, h) for l, r, h in payload["regions"])
        return cls(
            regions=regions,
            endpoints=tuple(payload["endpoints"]),
            n=int(payload["n"]),
            scale=scale,
            label=str(payload.get("label", "")),
        )


def construct_fuzzy(
    interval_set: IntervalSet, scale: ScaleConfig, label: str | None = None
) -> FuzzyNumber:
    """Build the canonical fuzzy number of an interval set.

    Breakpoints are the distinct interval bounds. Each open segment between
    consecutive breakpoints gets the membership of its midpoint (membership
    is constant there: no bound lies inside); each breakpoint gets its
    direct-count membership, stored as a line region only where it exceeds
    the neighbouring plateaus. The reconstruction
    ``max height over regions containing x`` then equals the direct count
    at every real x.
    """
    interval_set.validate_scale(scale)
    xs = interval_set.endpoints()
    regions = _profile_regions(xs, lambda x: membership_at(interval_set, x))
    return FuzzyNumber(
        regions=regions,
        endpoints=xs,
        n=interval_set.n,
        scale=scale,
        label=interval_set.label if label is None else label,
    )


def canonicalize(regions: Iterable[Region]) -> tuple[Region, ...]:
    """Rebuild the canonical region list of an arbitrary region list.

    Idempotent: applying it to an already-canonical list returns an equal
    list. Membership under the max-resolution rule is preserved exactly.
    """
    regs = sorted(regions, key=lambda r: (r.left, r.right))
    if not regs:
        return ()

    def mu(x: float) -> float:
        best = 0.0
        for region in regs:
            if region.left <= x <= region.right and region.height > best:
                best = region.height
        return best

    points: set[float] = set()
    for region in regs:
        points.add(region.left)
        points.add(region.right)
    return _profile_regions(sorted(points), mu)


def evaluation_points(a: FuzzyNumber, b: FuzzyNumber) -> tuple[float, ...]:
    """Sorted, deduplicated union of both operands' source endpoints."""
    return tuple(sorted(set(a.endpoints) | set(b.endpoints)))


def check_same_scale(a: FuzzyNumber, b: FuzzyNumber) -> None:
    if a.scale != b.scale:
        raise ScaleMismatch(
            f"{a.label!r} on [{a.scale.scale_min}, {a.scale.scale_max}] vs "
            f"{b.label!r} on [{b.scale.scale_min}, {b.scale.scale_max}]"
        )
