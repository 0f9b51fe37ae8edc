"""Crisp intervals, interval sets, measurement scales, and dataset loading.

An interval set aggregates one closed interval per source (one expert, one
observation, ...). Duplicate intervals are kept: the set is a multiset and
downstream membership counts depend on multiplicity. Datasets are long-format
tables mapping (alternative, criterion) pairs to interval sets on a shared,
explicitly configured scale.
"""

from __future__ import annotations

import csv
import json
import math
import warnings
from dataclasses import dataclass
from pathlib import Path
from typing import Mapping

from .errors import (
    EmptyDataset,
    InvertedBounds,
    MalformedInterval,
    MalformedRow,
    OutOfScale,
    RaggedCellWarning,
    ZeroSources,
)

DATASET_HEADER = ("alternative", "criterion", "source", "left", "right")


@dataclass(frozen=True)
class Interval:
    """Closed interval [left, right]; left == right is a point interval."""

    left: float
    right: float

    def __post_init__(self):
        object.__setattr__(self, "left", float(self.left))
        object.__setattr__(self, "right", float(self.right))
        if not (math.isfinite(self.left) and math.isfinite(self.right)):
            raise MalformedInterval(
                f"interval bounds must be finite, got [{self.left}, {self.right}]"
            )
        if self.left > self.right:
            raise InvertedBounds(
                f"left bound {self.left} exceeds right bound {self.right}"
            )

    @property
    def width(self) -> float:
        return self.right - self.left

    @property
    def midpoint(self) -> float:
        return (self.left + self.right) / 2

    def contains(self, x: float) -> bool:
        return self.left <= x <= self.right

    def shifted(self, delta: float) -> Interval:
        return Interval(self.left + delta, self.right + delta)

    def __str__(self) -> str:
        return f"[{self.left}, {self.right}]"


def parse_interval(text: str) -> Interval:
    """Parse ``L:R``, ``[L,R]``, or a bare number ``V`` (meaning [V, V]).

    Raises MalformedInterval for unparseable text and InvertedBounds when
    the left bound exceeds the right bound.
    """
    raw = text.strip()
    if not raw:
        raise MalformedInterval("empty interval text")
    if raw.startswith("[") and raw.endswith("]"):
        body, sep = raw[1:-1], ","
    elif ":" in raw:
        body, sep = raw, ":"
    else:
        body, sep = raw, None
    try:
        if sep is None:
            value = float(body)
            return Interval(value, value)
        parts = body.split(sep)
        if len(parts) != 2:
            raise ValueError(body)
        return Interval(float(parts[0]), float(parts[1]))
    except (ValueError, OverflowError) as exc:
        raise MalformedInterval(f"cannot parse interval from {text!r}") from exc


def format_interval(interval: Interval) -> str:
    """Inverse of parse_interval; round-trips bit-exactly."""
    return f"{interval.left!r}:{interval.right!r}"


@dataclass(frozen=True)
class ScaleConfig:
    """Measurement scale; every interval must lie within [scale_min, scale_max]."""

    scale_min: float
    scale_max: float

    def __post_init__(self):
        object.__setattr__(self, "scale_min", float(self.scale_min))
        object.__setattr__(self, "scale_max", float(self.scale_max))
        if not (math.isfinite(self.scale_min) and math.isfinite(self.scale_max)):
            raise ValueError("scale bounds must be finite")
        if self.scale_min >= self.scale_max:
            raise ValueError(
                f"scale_min must be strictly below scale_max, got "
                f"[{self.scale_min}, {self.scale_max}]"
            )

    @property
    def range(self) -> float:
        return self.scale_max - self.scale_min

    def covers(self, interval: Interval) -> bool:
        return self.scale_min <= interval.left and interval.right <= self.scale_max


@dataclass(frozen=True)
class IntervalSet:
    """Multiset of intervals gathered for one alternative."""

    intervals: tuple[Interval, ...]
    label: str = ""

    def __post_init__(self):
        object.__setattr__(self, "intervals", tuple(self.intervals))
        if not self.intervals:
            raise ZeroSources(f"interval set {self.label!r} has no intervals")

    @property
    def n(self) -> int:
        return len(self.intervals)

    def endpoints(self) -> tuple[float, ...]:
        """Sorted, deduplicated bounds of all member intervals."""
        points = {iv.left for iv in self.intervals}
        points.update(iv.right for iv in self.intervals)
        return tuple(sorted(points))

    def shifted(self, delta: float) -> IntervalSet:
        return IntervalSet(tuple(iv.shifted(delta) for iv in self.intervals), self.label)

    def validate_scale(self, scale: ScaleConfig) -> None:
        for iv in self.intervals:
            if not scale.covers(iv):
                raise OutOfScale(
                    f"interval {iv} of {self.label!r} outside scale "
                    f"[{scale.scale_min}, {scale.scale_max}]"
                )


def ideal_interval_set(scale: ScaleConfig, n: int, which: str) -> IntervalSet:
    """n sources all giving the scale maximum ("best") or minimum ("worst")."""
    if n < 1:
        raise ZeroSources("ideal interval set needs at least one source")
    if which not in ("best", "worst"):
        raise ValueError(f"which must be 'best' or 'worst', got {which!r}")
    value = scale.scale_max if which == "best" else scale.scale_min
    return IntervalSet(
        tuple(Interval(value, value) for _ in range(n)), label=f"ideal {which}"
    )


def midpoint_mean(interval_set: IntervalSet) -> float:
    """Mean of interval midpoints: the traditional preprocessing baseline."""
    return sum(iv.midpoint for iv in interval_set.intervals) / interval_set.n


@dataclass(frozen=True)
class MultiCriteriaDataset:
    """Alternatives x criteria grid of interval sets on one scale."""

    alternatives: tuple[str, ...]
    criteria: tuple[str, ...]
    cells: Mapping[tuple[str, str], IntervalSet]
    scale: ScaleConfig

    def __post_init__(self):
        object.__setattr__(self, "alternatives", tuple(self.alternatives))
        object.__setattr__(self, "criteria", tuple(self.criteria))
        object.__setattr__(self, "cells", dict(self.cells))
        for alternative in self.alternatives:
            for criterion in self.criteria:
                if (alternative, criterion) not in self.cells:
                    raise MalformedRow(
                        f"missing cell for alternative {alternative!r}, "
                        f"criterion {criterion!r}"
                    )

    def cell(self, alternative: str, criterion: str) -> IntervalSet:
        return self.cells[(alternative, criterion)]

    def column(self, criterion: str) -> list[IntervalSet]:
        """Cells of one criterion in alternative order."""
        if criterion not in self.criteria:
            raise KeyError(f"unknown criterion {criterion!r}")
        return [self.cells[(alt, criterion)] for alt in self.alternatives]

    def without_criterion(self, criterion: str) -> MultiCriteriaDataset:
        if criterion not in self.criteria:
            raise KeyError(f"unknown criterion {criterion!r}")
        kept = tuple(c for c in self.criteria if c != criterion)
        if not kept:
            raise EmptyDataset("excluding the only criterion leaves no data")
        cells = {
            key: value for key, value in self.cells.items() if key[1] != criterion
        }
        return MultiCriteriaDataset(self.alternatives, kept, cells, self.scale)


def _read_csv_rows(path: Path) -> list[tuple[int, dict]]:
    rows = []
    with open(path, newline="", encoding="utf-8") as handle:
        reader = csv.reader(handle)
        header = None
        for line_no, record in enumerate(reader, start=1):
            if not record or all(not cell.strip() for cell in record):
                continue
            if header is None:
                header = tuple(cell.strip().lower() for cell in record)
                if header != DATASET_HEADER:
                    raise MalformedRow(
                        f"{path}: expected header {','.join(DATASET_HEADER)}, "
                        f"got {','.join(header)}",
                        line=line_no,
                    )
                continue
            if len(record) != len(DATASET_HEADER):
                raise MalformedRow(
                    f"{path} line {line_no}: expected {len(DATASET_HEADER)} fields, "
                    f"got {len(record)}",
                    line=line_no,
                )
            rows.append(
                (line_no, dict(zip(DATASET_HEADER, (cell.strip() for cell in record))))
            )
    return rows


def _read_json_rows(path: Path) -> list[tuple[int, dict]]:
    with open(path, encoding="utf-8") as handle:
        try:
            payload = json.load(handle)
        except json.JSONDecodeError as exc:
            raise MalformedRow(f"{path}: invalid JSON ({exc})") from exc
    if not isinstance(payload, list):
        raise MalformedRow(f"{path}: expected a JSON array of row objects")
    rows = []
    for index, entry in enumerate(payload, start=1):
        if not isinstance(entry, dict) or set(DATASET_HEADER) - set(entry):
            raise MalformedRow(
                f"{path} row {index}: expected keys {', '.join(DATASET_HEADER)}",
                line=index,
            )
        rows.append((index, {key: entry[key] for key in DATASET_HEADER}))
    return rows


def load_dataset(path: str | Path, scale: ScaleConfig) -> MultiCriteriaDataset:
    """Load a long-format CSV (or JSON mirror) dataset and validate it.

    Rows are grouped per (alternative, criterion) cell and ordered by source
    label inside each cell. Alternatives and criteria keep first-appearance
    order. Every bound is validated against the scale. Differing source
    counts across one alternative's criteria raise a RaggedCellWarning only:
    the aggregation accepts any number of sources per cell.
    """
    path = Path(path)
    if path.suffix.lower() == ".json":
        raw_rows = _read_json_rows(path)
    else:
        raw_rows = _read_csv_rows(path)
    if not raw_rows:
        raise EmptyDataset(f"{path} contains no data rows")

    alternatives: list[str] = []
    criteria: list[str] = []
    grouped: dict[tuple[str, str], list[tuple[str, Interval]]] = {}
    for line_no, row in raw_rows:
        alternative = str(row["alternative"])
        criterion = str(row["criterion"])
        source = str(row["source"])
        try:
            left = float(row["left"])
            right = float(row["right"])
        except (TypeError, ValueError) as exc:
            raise MalformedRow(
                f"{path} line {line_no}: non-numeric bound "
                f"({row['left']!r}, {row['right']!r})",
                line=line_no,
            ) from exc
        try:
            interval = Interval(left, right)
        except InvertedBounds as exc:
            raise InvertedBounds(f"{path} line {line_no}: {exc}") from exc
        except MalformedInterval as exc:
            raise MalformedRow(f"{path} line {line_no}: {exc}", line=line_no) from exc
        if not scale.covers(interval):
            raise OutOfScale(
                f"{path} line {line_no}: interval {interval} outside scale "
                f"[{scale.scale_min}, {scale.scale_max}]"
            )
        if alternative not in alternatives:
            alternatives.append(alternative)
        if criterion not in criteria:
            criteria.append(criterion)
        grouped.setdefault((alternative, criterion), []).append((source, interval))

    cells = {}
    for (alternative, criterion), members in grouped.items():
        members.sort(key=lambda item: item[0])
        cells[(alternative, criterion)] = IntervalSet(
            tuple(interval for _, interval in members), label=alternative
        )

    for alternative in alternatives:
        counts = {
            criterion: cells[(alternative, criterion)].n
            for criterion in criteria
            if (alternative, criterion) in cells
        }
        if len(set(counts.values())) > 1:
            warnings.warn(
                f"alternative {alternative!r} has differing source counts "
                f"across criteria: {counts}",
                RaggedCellWarning,
                stacklevel=2,
            )

    return MultiCriteriaDataset(tuple(alternatives), tuple(criteria), cells, scale)
