"""Exception and warning types shared across the package."""


class IaaRankError(Exception):
    """Base class for all library errors."""


class MalformedInterval(IaaRankError):
    """Interval text or bounds that cannot form a valid interval."""


class InvertedBounds(IaaRankError):
    """Interval whose left bound exceeds its right bound."""


class MalformedRow(IaaRankError):
    """Dataset row or header that cannot be parsed."""

    def __init__(self, message: str, line: int | None = None):
        super().__init__(message)
        self.line = line


class OutOfScale(IaaRankError):
    """Interval bound outside the configured measurement scale."""


class EmptyDataset(IaaRankError):
    """Dataset file with no data rows."""


class ZeroSources(IaaRankError):
    """Interval set requested or built with no source intervals."""


class ScaleMismatch(IaaRankError):
    """Operands constructed over different measurement scales."""


class EmptyEvaluation(IaaRankError):
    """Similarity denominator is zero at every evaluation point."""


class DivisionByZero(IaaRankError):
    """Ideal-ratio score undefined: zero similarity to both ideals."""

    def __init__(self, message: str, label: str | None = None):
        super().__init__(message)
        self.label = label


class RaggedCellWarning(UserWarning):
    """Criteria of one alternative carry differing source counts."""
