"""
Custom exception classes for the flagrank engine.
"""

from typing import Iterable, List


class FlagRankError(Exception):
    """Base exception class for all application-specific errors."""
    pass


class InvalidTypeError(FlagRankError):
    """Raised for an unknown family or a rank outside the family bounds."""
    pass


class InvalidParabolicError(FlagRankError):
    """Raised when a parabolic index set does not fit the root system."""
    pass


class DimensionMismatchError(FlagRankError):
    """Raised when vectors or matrices of incompatible sizes are combined."""
    pass


class NonSquareMatrixError(DimensionMismatchError):
    """Raised when a square matrix is required."""
    pass


class NotRootError(FlagRankError):
    """Raised when a coordinate vector is not a root of the system."""
    pass


class NotNilpotentError(FlagRankError):
    """Raised when an exponential series fails to terminate."""
    pass


class GenericityError(FlagRankError):
    """Raised when a point violates the open conditions of a construction."""

    def __init__(self, failed: Iterable[str]):
        self.failed: List[str] = list(failed)
        super().__init__("genericity violated: " + ", ".join(self.failed))


class TransversalityError(FlagRankError):
    """Raised when subspaces that must meet trivially do not."""
    pass


class StructuralImpossibilityError(FlagRankError):
    """Raised when the requested structure cannot exist (e.g. odd symplectic rank)."""
    pass


class YConditionError(FlagRankError):
    """Raised when a triple of flags violates the open conditions (1)-(7)."""

    def __init__(self, violated: Iterable):
        self.violated = list(violated)
        super().__init__(
            "violated conditions: " + ", ".join(str(v) for v in self.violated)
        )


class DegenerateConfigurationError(FlagRankError):
    """Raised when a cross-ratio configuration is degenerate."""
    pass


class NotRationalError(FlagRankError):
    """Raised when a construction needs a square root that is not rational."""
    pass


class ResampleExhaustedError(FlagRankError):
    """Raised when random sampling keeps landing on an excluded locus."""
    pass


class GoldenMismatchError(FlagRankError):
    """Raised when a computed verdict disagrees with the golden tables."""
    pass


class CrossCheckError(FlagRankError):
    """Raised when the direct test and the Levi route disagree."""
    pass


class ExportError(FlagRankError):
    """Raised when an error occurs while exporting a report."""
    pass
