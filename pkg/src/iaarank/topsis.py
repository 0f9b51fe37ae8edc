"""Multi-criteria closeness ranking over fuzzy-number decision matrices.

Per criterion the best and worst alternatives under the universal comparison
serve as the positive and negative ideal solutions (swapped on cost
criteria). Separations replace distances with weighted dissimilarity
(one minus similarity), and the closeness coefficient ranks alternatives by
remoteness from the worst relative to total separation. Outputs are a
reconstruction of the classic pipeline adapted to fuzzy-number cells.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cmp_to_key
from typing import Mapping, Sequence

from .fuzzy import FuzzyNumber, construct_fuzzy
from .intervals import MultiCriteriaDataset, ScaleConfig
from .ranking import DEFAULT_EPSILON, EQUAL, rank_universal, universal_compare
from .similarity import DEFAULT_WEIGHTS, SimilarityWeights, measure_similarity

DIRECTIONS = ("benefit", "cost")
SEPARATION_MEASURES = ("attribute", "combined")


@dataclass(frozen=True)
class DecisionMatrix:
    """Alternatives x criteria grid of fuzzy numbers with weighted directions."""

    alternatives: tuple[str, ...]
    criteria: tuple[str, ...]
    cells: Mapping[tuple[str, str], FuzzyNumber]
    scale: ScaleConfig
    weights: tuple[float, ...]
    directions: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "alternatives", tuple(self.alternatives))
        object.__setattr__(self, "criteria", tuple(self.criteria))
        object.__setattr__(self, "cells", dict(self.cells))
        if len(self.weights) != len(self.criteria):
            raise ValueError("one weight per criterion required")
        if len(self.directions) != len(self.criteria):
            raise ValueError("one direction per criterion required")
        if any(w < 0 for w in self.weights):
            raise ValueError("weights must be non-negative")
        total = sum(self.weights)
        if total <= 0:
            raise ValueError("weights must not all be zero")
        object.__setattr__(
            self, "weights", tuple(float(w) / total for w in self.weights)
        )
        for direction in self.directions:
            if direction not in DIRECTIONS:
                raise ValueError(
                    f"direction must be one of {DIRECTIONS}, got {direction!r}"
                )
        for alternative in self.alternatives:
            for criterion in self.criteria:
                if (alternative, criterion) not in self.cells:
                    raise ValueError(
                        f"missing cell ({alternative!r}, {criterion!r})"
                    )

    @classmethod
    def from_dataset(
        cls,
        dataset: MultiCriteriaDataset,
        weights: Sequence[float] | None = None,
        directions: Sequence[str] | None = None,
    ) -> DecisionMatrix:
        """Elevate every dataset cell to a fuzzy number; defaults: equal
        weights, all-benefit directions."""
        cells = {
            key: construct_fuzzy(interval_set, dataset.scale)
            for key, interval_set in dataset.cells.items()
        }
        count = len(dataset.criteria)
        return cls(
            alternatives=dataset.alternatives,
            criteria=dataset.criteria,
            cells=cells,
            scale=dataset.scale,
            weights=tuple(weights) if weights is not None else (1.0,) * count,
            directions=tuple(directions)
            if directions is not None
            else ("benefit",) * count,
        )

    def column(self, criterion: str) -> list[FuzzyNumber]:
        return [self.cells[(alt, criterion)] for alt in self.alternatives]

    def cell(self, alternative: str, criterion: str) -> FuzzyNumber:
        return self.cells[(alternative, criterion)]


@dataclass(frozen=True)
class CriterionIdeals:
    criterion: str
    pis_label: str
    nis_label: str
    pis: FuzzyNumber
    nis: FuzzyNumber
    degenerate: bool


def select_ideals(
    matrix: DecisionMatrix, epsilon: float = DEFAULT_EPSILON
) -> tuple[CriterionIdeals, ...]:
    """Choose the per-criterion ideal solutions from the alternatives.

    The top alternative under the universal ranking is the positive ideal and
    the bottom one the negative ideal; cost criteria swap the two. A
    criterion whose extremes compare equal is flagged degenerate.
    """
    ideals = []
    for index, criterion in enumerate(matrix.criteria):
        column = matrix.column(criterion)
        result = rank_universal(column, epsilon)
        by_label = {fz.label: fz for fz in column}
        top = by_label[result.entries[0].label]
        bottom = by_label[result.entries[-1].label]
        if matrix.directions[index] == "cost":
            top, bottom = bottom, top
        ideals.append(
            CriterionIdeals(
                criterion=criterion,
                pis_label=top.label,
                nis_label=bottom.label,
                pis=top,
                nis=bottom,
                degenerate=universal_compare(top, bottom, epsilon) == EQUAL,
            )
        )
    return tuple(ideals)


def separations(
    matrix: DecisionMatrix,
    ideals: Sequence[CriterionIdeals],
    measure: str = "combined",
    weights: SimilarityWeights = DEFAULT_WEIGHTS,
) -> list[tuple[float, float]]:
    """Weighted dissimilarity of every alternative to the two ideal profiles.

    Returns (D+, D-) pairs aligned with matrix.alternatives; criterion terms
    are summed in criterion order with normalized weights.
    """
    if measure not in SEPARATION_MEASURES:
        raise ValueError(
            f"measure must be one of {SEPARATION_MEASURES}, got {measure!r}"
        )
    pairs = []
    for alternative in matrix.alternatives:
        d_plus = 0.0
        d_minus = 0.0
        for index, criterion in enumerate(matrix.criteria):
            cell = matrix.cell(alternative, criterion)
            weight = matrix.weights[index]
            ideal = ideals[index]
            d_plus += weight * (1.0 - measure_similarity(measure, cell, ideal.pis, weights))
            d_minus += weight * (1.0 - measure_similarity(measure, cell, ideal.nis, weights))
        pairs.append((d_plus, d_minus))
    return pairs


@dataclass(frozen=True)
class TopsisEntry:
    label: str
    d_plus: float
    d_minus: float
    closeness: float
    rank: int
    degenerate: bool


@dataclass(frozen=True)
class TopsisResult:
    measure: str
    entries: tuple[TopsisEntry, ...]
    ideals: tuple[CriterionIdeals, ...]
    ties: tuple[tuple[str, ...], ...] = ()

    def to_dict(self) -> dict:
        return {
            "measure": self.measure,
            "entries": [
                {
                    "label": e.label,
                    "d_plus": e.d_plus,
                    "d_minus": e.d_minus,
                    "closeness": e.closeness,
                    "rank": e.rank,
                    "degenerate": e.degenerate,
                }
                for e in self.entries
            ],
            "ideals": [
                {
                    "criterion": ideal.criterion,
                    "pis": ideal.pis_label,
                    "nis": ideal.nis_label,
                    "degenerate": ideal.degenerate,
                }
                for ideal in self.ideals
            ],
            "ties": [list(group) for group in self.ties],
        }


def topsis_rank(
    matrix: DecisionMatrix,
    measure: str = "combined",
    weights: SimilarityWeights = DEFAULT_WEIGHTS,
    epsilon: float = DEFAULT_EPSILON,
    tie_break_criterion: str | None = None,
) -> TopsisResult:
    """Rank alternatives by closeness coefficient D- / (D+ + D-).

    A vanishing denominator (the alternative coincides with both ideals)
    yields closeness 0.5 with a degenerate flag instead of failing, so batch
    runs always complete. Exact closeness ties are ordered by the universal
    comparison on the tie-break criterion when one is configured, otherwise
    they share a rank and are reported in ties.
    """
    ideals = select_ideals(matrix, epsilon)
    pairs = separations(matrix, ideals, measure, weights)
    rows = []
    for label, (d_plus, d_minus) in zip(matrix.alternatives, pairs):
        total = d_plus + d_minus
        if total > 0:
            closeness, degenerate = d_minus / total, False
        else:
            closeness, degenerate = 0.5, True
        rows.append((label, d_plus, d_minus, closeness, degenerate))

    def tie_cells(row_a, row_b):
        a = matrix.cell(row_a[0], tie_break_criterion)
        b = matrix.cell(row_b[0], tie_break_criterion)
        return universal_compare(a, b, epsilon)

    def compare(row_a, row_b):
        if row_a[3] != row_b[3]:
            return -1 if row_a[3] > row_b[3] else 1
        if tie_break_criterion is not None:
            return -tie_cells(row_a, row_b)
        return 0

    ordered = sorted(rows, key=cmp_to_key(compare))
    entries = []
    tie_groups: list[tuple[str, ...]] = []
    rank = 1
    group_start = 0

    def equal(row_a, row_b) -> bool:
        if row_a[3] != row_b[3]:
            return False
        return tie_break_criterion is None or tie_cells(row_a, row_b) == EQUAL

    def close_group(end: int) -> None:
        if end - group_start > 1:
            tie_groups.append(tuple(ordered[i][0] for i in range(group_start, end)))

    for position, row in enumerate(ordered):
        if position > 0 and not equal(ordered[position - 1], row):
            close_group(position)
            group_start = position
            rank = position + 1
        label, d_plus, d_minus, closeness, degenerate = row
        entries.append(
            TopsisEntry(
                label=label,
                d_plus=d_plus,
                d_minus=d_minus,
                closeness=closeness,
                rank=rank,
                degenerate=degenerate,
            )
        )
    close_group(len(ordered))
    return TopsisResult(
        measure=measure, entries=tuple(entries), ideals=ideals, ties=tuple(tie_groups)
    )
