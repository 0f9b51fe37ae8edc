"""Geometric attributes of fuzzy numbers and the pairwise feature vector.

Attributes are derived from the canonical region list alone. The feature
vector compares two fuzzy numbers on a shared scale and normalizes every
component into [0, 1]; identical inputs yield the all-zero vector.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .errors import ScaleMismatch
from .fuzzy import FuzzyNumber, Region, check_same_scale
from .intervals import ScaleConfig

_ZERO = 1e-12
_QUARTILE_FRACTIONS = (0.25, 0.5, 0.75)


@dataclass(frozen=True)
class AttributeVector:
    """The seven geometric attributes of one fuzzy number."""

    quartiles: tuple[float, float, float, float, float]
    centroid_x: float
    centroid_y: float
    area: float
    height: float
    perimeter: float
    agreement_ratio: float

    def to_dict(self) -> dict:
        return {
            "quartiles": list(self.quartiles),
            "centroid_x": self.centroid_x,
            "centroid_y": self.centroid_y,
            "area": self.area,
            "height": self.height,
            "perimeter": self.perimeter,
            "agreement_ratio": self.agreement_ratio,
        }


def centroid(fz: FuzzyNumber) -> tuple[float, float]:
    """Centre of mass of the region list, weighing certainty and uncertainty.

    The x coordinate is the height-weighted average of region midpoints; the
    y coordinate is the mean half-height over regions of non-zero height
    (stored regions always have positive height, the guard is defensive).
    """
    total_height = sum(r.height for r in fz.regions)
    centroid_x = sum(r.height * (r.left + r.right) for r in fz.regions) / (
        2 * total_height
    )
    non_zero = sum(1 for r in fz.regions if r.height > 0)
    centroid_y = sum(r.height / 2 for r in fz.regions) / non_zero
    return centroid_x, centroid_y


def area(fz: FuzzyNumber) -> float:
    """Total rectangle area of the regions; line regions contribute nothing."""
    return sum(r.height * r.width for r in fz.regions)


def height(fz: FuzzyNumber) -> float:
    """Maximum membership degree attained."""
    return max(r.height for r in fz.regions)


def _components(regions: tuple[Region, ...]) -> list[list[Region]]:
    """Group regions into maximal connected support components.

    Regions touching at a single point belong to one component; gaps of
    positive width split components.
    """
    components: list[list[Region]] = []
    reach = None
    for region in regions:
        if reach is not None and region.left <= reach:
            components[-1].append(region)
            reach = max(reach, region.right)
        else:
            components.append([region])
            reach = region.right
    return components


def _component_perimeter(component: list[Region]) -> float:
    start_height = {r.left: r.height for r in component if not r.is_line}
    end_height = {r.right: r.height for r in component if not r.is_line}
    spike_height = {r.left: r.height for r in component if r.is_line}
    left_edge = component[0].left
    right_edge = max(r.right for r in component)
    xs = sorted({r.left for r in component} | {r.right for r in component})
    vertical = 0.0
    for x in xs:
        left_h = end_height.get(x, 0.0)
        right_h = start_height.get(x, 0.0)
        top = max(left_h, right_h, spike_height.get(x, 0.0))
        vertical += (top - left_h) + (top - right_h)
    return 2 * (right_edge - left_edge) + vertical


def perimeter(fz: FuzzyNumber) -> float:
    """Length of the geometric outline of the profile, baseline included.

    Per connected support component: the baseline, the horizontal tops (which
    tile the component, so they equal the baseline), and every vertical
    excursion - the rise from zero at the left edge, each interior height
    jump, each spike rising above its neighbouring plateaus and back, and the
    drop to zero at the right edge. An isolated line region contributes twice
    its height.
    """
    return sum(_component_perimeter(c) for c in _components(fz.regions))


def membership_polyline(fz: FuzzyNumber) -> list[tuple[float, float]]:
    """Ordered (x, membership) vertices tracing the upper profile.

    Discontinuities emit two vertices at the same x, spikes three; flat
    interior breakpoints emit nothing. Feeding the vertices to a line plot
    redraws the membership function.
    """
    vertices: list[tuple[float, float]] = []
    for component in _components(fz.regions):
        start_height = {r.left: r.height for r in component if not r.is_line}
        end_height = {r.right: r.height for r in component if not r.is_line}
        spike_height = {r.left: r.height for r in component if r.is_line}
        xs = sorted({r.left for r in component} | {r.right for r in component})
        for x in xs:
            left_h = end_height.get(x, 0.0)
            right_h = start_height.get(x, 0.0)
            spike = spike_height.get(x, 0.0)
            if spike > max(left_h, right_h):
                vertices += [(x, left_h), (x, spike), (x, right_h)]
            elif left_h != right_h:
                vertices += [(x, left_h), (x, right_h)]
    return vertices


def quartile_points(fz: FuzzyNumber) -> tuple[float, float, float, float, float]:
    """Positions where the cumulative area fraction first reaches 0..1 quarters.

    Interpolated linearly inside segment regions; line regions carry no area.
    The outer points are pinned to the support bounds. When the total area is
    negligible (all mass in spikes) the quarters fall back to the discrete
    height-weighted distribution over region positions.
    """
    low = fz.support_min
    high = fz.support_max
    segments = [r for r in fz.regions if not r.is_line]
    total = sum(r.height * r.width for r in segments)
    points = [low]
    if total > _ZERO:
        for fraction in _QUARTILE_FRACTIONS:
            target = fraction * total
            cumulative = 0.0
            position = segments[-1].right
            for seg in segments:
                seg_area = seg.height * seg.width
                if cumulative + seg_area >= target:
                    position = min(
                        seg.left + (target - cumulative) / seg.height, seg.right
                    )
                    break
                cumulative += seg_area
            points.append(position)
    else:
        weight = sum(r.height for r in fz.regions)
        for fraction in _QUARTILE_FRACTIONS:
            target = fraction * weight
            cumulative = 0.0
            position = fz.regions[-1].left
            for region in fz.regions:
                cumulative += region.height
                if cumulative >= target:
                    position = (region.left + region.right) / 2
                    break
            points.append(position)
    points.append(high)
    return tuple(points)


def support_length(fz: FuzzyNumber) -> float:
    """Total width of the support: the sum of connected component spans."""
    return sum(
        max(r.right for r in comp) - comp[0].left for comp in _components(fz.regions)
    )


def agreement_ratio(fz: FuzzyNumber) -> float:
    """Mean membership over the support; pure-spike numbers rate zero.

    The support excludes gaps between components, so a number whose sources
    overlap tightly scores high even when an outlier spike widens the hull.
    A support of zero width (all mass in spikes) carries no area and rates 0.
    """
    length = support_length(fz)
    if length <= _ZERO:
        return 0.0
    return area(fz) / length


@lru_cache(maxsize=None)
def attribute_vector(fz: FuzzyNumber) -> AttributeVector:
    """All seven attributes of one fuzzy number (cached per value)."""
    centroid_x, centroid_y = centroid(fz)
    return AttributeVector(
        quartiles=quartile_points(fz),
        centroid_x=centroid_x,
        centroid_y=centroid_y,
        area=area(fz),
        height=height(fz),
        perimeter=perimeter(fz),
        agreement_ratio=agreement_ratio(fz),
    )


@dataclass(frozen=True)
class FeatureVector:
    """Normalized pairwise differences, ordered as the weight vector expects."""

    quartile: float
    centroid: float
    area: float
    height: float
    perimeter: float
    agreement: float

    def as_tuple(self) -> tuple[float, float, float, float, float, float]:
        return (
            self.quartile,
            self.centroid,
            self.area,
            self.height,
            self.perimeter,
            self.agreement,
        )


def _ratio_difference(u: float, v: float) -> float:
    # 0/0 -> 0: two zero-area (or zero-perimeter) inputs count as identical.
    largest = max(u, v)
    if largest <= 0:
        return 0.0
    return abs(u - v) / largest


def feature_vector(
    a: FuzzyNumber, b: FuzzyNumber, scale: ScaleConfig | None = None
) -> FeatureVector:
    """Six comparison features of a pair of fuzzy numbers on one scale.

    Quartile spread and centroid distance are normalized by the scale range,
    area and perimeter by the larger operand, height and agreement ratio are
    absolute differences of values already in [0, 1].
    """
    check_same_scale(a, b)
    if scale is not None and a.scale != scale:
        raise ScaleMismatch(
            f"operands on [{a.scale.scale_min}, {a.scale.scale_max}] do not "
            f"match scale [{scale.scale_min}, {scale.scale_max}]"
        )
    attrs_a = attribute_vector(a)
    attrs_b = attribute_vector(b)
    span = a.scale.range
    quartile = sum(
        abs(x - y) for x, y in zip(attrs_a.quartiles, attrs_b.quartiles)
    ) / (5 * span)
    centroid_distance = math.hypot(
        attrs_a.centroid_x - attrs_b.centroid_x,
        attrs_a.centroid_y - attrs_b.centroid_y,
    ) / math.hypot(span, 0.5)
    return FeatureVector(
        quartile=quartile,
        centroid=centroid_distance,
        area=_ratio_difference(attrs_a.area, attrs_b.area),
        height=abs(attrs_a.height - attrs_b.height),
        perimeter=_ratio_difference(attrs_a.perimeter, attrs_b.perimeter),
        agreement=abs(attrs_a.agreement_ratio - attrs_b.agreement_ratio),
    )
