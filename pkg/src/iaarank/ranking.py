"""Ranking relations for fuzzy numbers.

Three methods: the universal three-key total order (higher centroid-x, then
lower perimeter, then higher centroid-y), the ideal-ratio score against
synthetic best/worst references, and the traditional midpoint-mean baseline
on the raw interval sets.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cmp_to_key
from typing import Sequence

from .attributes import attribute_vector
from .errors import DivisionByZero
from .fuzzy import FuzzyNumber, check_same_scale
from .intervals import IntervalSet, midpoint_mean
from .similarity import DEFAULT_WEIGHTS, SimilarityWeights, measure_similarity

A_GREATER = 1
EQUAL = 0
B_GREATER = -1

DEFAULT_EPSILON = 1e-9


def _close(x: float, y: float, epsilon: float) -> bool:
    return abs(x - y) <= epsilon * max(1.0, abs(x), abs(y))


def universal_compare(
    a: FuzzyNumber, b: FuzzyNumber, epsilon: float = DEFAULT_EPSILON
) -> int:
    """Compare two fuzzy numbers without external context.

    Keys in order: greater centroid-x wins; on a tie the lower perimeter wins
    (a tighter outline means more certainty, so the centroid is more
    trustworthy); on a further tie the greater centroid-y wins. Returns 1
    when a outranks b, -1 when b outranks a, 0 when all three keys tie.
    Ties use a relative tolerance of epsilon per key.
    """
    check_same_scale(a, b)
    if epsilon < 0:
        raise ValueError("epsilon must be non-negative")
    attrs_a = attribute_vector(a)
    attrs_b = attribute_vector(b)
    keys = (
        (attrs_a.centroid_x, attrs_b.centroid_x, True),
        (attrs_a.perimeter, attrs_b.perimeter, False),
        (attrs_a.centroid_y, attrs_b.centroid_y, True),
    )
    for value_a, value_b, higher_wins in keys:
        if _close(value_a, value_b, epsilon):
            continue
        return A_GREATER if (value_a > value_b) == higher_wins else B_GREATER
    return EQUAL


@dataclass(frozen=True)
class RankingEntry:
    label: str
    score: float | None
    rank: int


@dataclass(frozen=True)
class RankingResult:
    """Alternatives in rank order with competition-style 1-based ranks.

    Entries compared equal share the smaller rank; ties lists the label
    groups that compared equal.
    """

    method: str
    entries: tuple[RankingEntry, ...]
    ties: tuple[tuple[str, ...], ...] = ()

    def labels(self) -> tuple[str, ...]:
        return tuple(entry.label for entry in self.entries)

    def to_dict(self) -> dict:
        return {
            "method": self.method,
            "entries": [
                {"label": e.label, "score": e.score, "rank": e.rank}
                for e in self.entries
            ],
            "ties": [list(group) for group in self.ties],
        }


def _build_result(method, ordered, scores, equal) -> RankingResult:
    """Assign competition ranks over a sorted list given an equality relation."""
    labeled = [scores(item) for item in ordered]
    entries = []
    tie_groups = []
    rank = 1
    group_start = 0

    def close_group(end: int) -> None:
        if end - group_start > 1:
            tie_groups.append(tuple(labeled[i][0] for i in range(group_start, end)))

    for position, item in enumerate(ordered):
        if position > 0 and not equal(ordered[position - 1], item):
            close_group(position)
            group_start = position
            rank = position + 1
        label, score = labeled[position]
        entries.append(RankingEntry(label=label, score=score, rank=rank))
    close_group(len(ordered))
    return RankingResult(method=method, entries=tuple(entries), ties=tuple(tie_groups))


def rank_universal(
    items: Sequence[FuzzyNumber], epsilon: float = DEFAULT_EPSILON
) -> RankingResult:
    """Total order of the items under the universal comparison.

    Stable: exact ties keep their input order and share a rank.
    """
    if not items:
        raise ValueError("nothing to rank")
    ordered = sorted(
        items, key=cmp_to_key(lambda a, b: -universal_compare(a, b, epsilon))
    )
    return _build_result(
        "universal",
        ordered,
        scores=lambda fz: (fz.label, None),
        equal=lambda a, b: universal_compare(a, b, epsilon) == EQUAL,
    )


def ideal_ratio(
    fz: FuzzyNumber,
    ideal_best: FuzzyNumber,
    ideal_worst: FuzzyNumber,
    measure: str = "combined",
    weights: SimilarityWeights = DEFAULT_WEIGHTS,
) -> float:
    """Similarity to the ideal best over total similarity to both ideals.

    Higher means better. Raises DivisionByZero when both similarities vanish
    (possible under the pure overlap measure when the number touches neither
    ideal); the error carries the offending label.
    """
    s_best = measure_similarity(measure, fz, ideal_best, weights)
    s_worst = measure_similarity(measure, fz, ideal_worst, weights)
    total = s_best + s_worst
    if total == 0:
        raise DivisionByZero(
            f"{fz.label or 'alternative'}: zero similarity to both ideals",
            label=fz.label,
        )
    return s_best / total


def rank_by_ideal_ratio(
    items: Sequence[FuzzyNumber],
    ideal_best: FuzzyNumber,
    ideal_worst: FuzzyNumber,
    measure: str = "combined",
    weights: SimilarityWeights = DEFAULT_WEIGHTS,
    epsilon: float = DEFAULT_EPSILON,
) -> RankingResult:
    """Rank by descending ideal-ratio score.

    Exact score ties are ordered by the universal comparison and only stay
    tied (sharing a rank) when that comparison is also equal.
    """
    if not items:
        raise ValueError("nothing to rank")
    scored = [(fz, ideal_ratio(fz, ideal_best, ideal_worst, measure, weights))
              for fz in items]

    def compare(a, b):
        if a[1] != b[1]:
            return -1 if a[1] > b[1] else 1
        return -universal_compare(a[0], b[0], epsilon)

    ordered = sorted(scored, key=cmp_to_key(compare))
    return _build_result(
        f"ideal_ratio({measure})",
        ordered,
        scores=lambda item: (item[0].label, item[1]),
        equal=lambda a, b: a[1] == b[1]
        and universal_compare(a[0], b[0], epsilon) == EQUAL,
    )


def rank_baseline_mean(sets: Sequence[IntervalSet]) -> RankingResult:
    """Rank interval sets by descending midpoint mean (the traditional way)."""
    if not sets:
        raise ValueError("nothing to rank")
    scored = [(s, midpoint_mean(s)) for s in sets]
    ordered = sorted(scored, key=lambda item: -item[1])
    return _build_result(
        "baseline_mean",
        ordered,
        scores=lambda item: (item[0].label, item[1]),
        equal=lambda a, b: a[1] == b[1],
    )
