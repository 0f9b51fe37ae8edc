"""Aggregated fuzzy numbers from interval-valued data.

Build piecewise-constant fuzzy numbers whose membership at x is the fraction
of source intervals containing x, compare them with overlap and attribute
similarity measures, rank them against ideal references or by the universal
centroid order, and run a multi-criteria closeness pipeline on top.
"""

from . import errors
from .attributes import (
    AttributeVector,
    FeatureVector,
    agreement_ratio,
    area,
    attribute_vector,
    centroid,
    feature_vector,
    height,
    membership_polyline,
    perimeter,
    quartile_points,
)
from .cli import bundled_path
from .fuzzy import (
    FuzzyNumber,
    Region,
    canonicalize,
    construct_fuzzy,
    evaluation_points,
    membership_at,
)
from .intervals import (
    Interval,
    IntervalSet,
    MultiCriteriaDataset,
    ScaleConfig,
    format_interval,
    ideal_interval_set,
    load_dataset,
    midpoint_mean,
    parse_interval,
)
from .ranking import (
    RankingEntry,
    RankingResult,
    ideal_ratio,
    rank_baseline_mean,
    rank_by_ideal_ratio,
    rank_universal,
    universal_compare,
)
from .similarity import (
    DEFAULT_WEIGHTS,
    MEASURES,
    SimilarityWeights,
    attribute_similarity,
    combined_similarity,
    jaccard,
    measure_similarity,
)
from .topsis import (
    CriterionIdeals,
    DecisionMatrix,
    TopsisEntry,
    TopsisResult,
    select_ideals,
    separations,
    topsis_rank,
)

__version__ = "0.1.0"

__all__ = [
    "AttributeVector",
    "CriterionIdeals",
    "DEFAULT_WEIGHTS",
    "DecisionMatrix",
    "FeatureVector",
    "FuzzyNumber",
    "Interval",
    "IntervalSet",
    "MEASURES",
    "MultiCriteriaDataset",
    "RankingEntry",
    "RankingResult",
    "Region",
    "ScaleConfig",
    "SimilarityWeights",
    "TopsisEntry",
    "TopsisResult",
    "agreement_ratio",
    "area",
    "attribute_similarity",
    "attribute_vector",
    "bundled_path",
    "canonicalize",
    "centroid",
    "combined_similarity",
    "construct_fuzzy",
    "errors",
    "evaluation_points",
    "feature_vector",
    "format_interval",
    "height",
    "ideal_interval_set",
    "ideal_ratio",
    "jaccard",
    "load_dataset",
    "measure_similarity",
    "membership_at",
    "membership_polyline",
    "midpoint_mean",
    "parse_interval",
    "perimeter",
    "quartile_points",
    "rank_baseline_mean",
    "rank_by_ideal_ratio",
    "rank_universal",
    "select_ideals",
    "separations",
    "topsis_rank",
    "universal_compare",
    "__version__",
]
