"""
Exception hierarchy for rectcross.

Every error raised by the library derives from RectCrossError so callers
(the CLI in particular) can map failures to exit codes in one place.
Input-shaped errors also derive from ValueError.
"""
from typing import Optional, Sequence, Tuple


class RectCrossError(Exception):
    """Base class for all rectcross errors."""


class CoordinateBoundError(RectCrossError, ValueError):
    """A coordinate is not an integer or exceeds the supported magnitude."""


class DegenerateSegmentError(RectCrossError, ValueError):
    """A segment has identical endpoints."""


class GeneralPositionViolation(RectCrossError, ValueError):
    """
    Three points are collinear, or two points coincide.

    Attributes:
        triple: Offending vertex indices (two entries for a duplicate pair)
        points: The offending coordinates, in the same order
    """

    def __init__(
        self,
        message: str,
        triple: Tuple[int, ...] = (),
        points: Sequence[Tuple[int, int]] = (),
    ) -> None:
        super().__init__(message)
        self.triple = tuple(triple)
        self.points = tuple(tuple(p) for p in points)


class IndexOutOfRange(RectCrossError, IndexError):
    """A vertex index is outside 0..n-1."""


class UnsupportedShape(RectCrossError, ValueError):
    """
    The drawing's hull-peel profile does not fit the requested operation.

    Attributes:
        profile: Layer sizes of the offending drawing, if known
    """

    def __init__(self, message: str, profile: Optional[Tuple[int, ...]] = None) -> None:
        super().__init__(message)
        self.profile = profile


class NotConcave(RectCrossError, ValueError):
    """An operation that needs a concave kite received a convex one."""


class UnknownRule(RectCrossError, KeyError):
    """No rule with the given identifier exists."""

    def __str__(self) -> str:
        return str(self.args[0]) if self.args else "unknown rule"


class HypothesisNotMet(RectCrossError, ValueError):
    """Witnesses passed to a geometric lemma check do not satisfy its hypothesis."""


class GenerationBudgetExceeded(RectCrossError, RuntimeError):
    """
    A rejection sampler ran out of retries.

    Attributes:
        attempts: Number of candidates drawn before giving up
    """

    def __init__(self, message: str, attempts: int) -> None:
        super().__init__(message)
        self.attempts = attempts


class BudgetExceeded(RectCrossError, ValueError):
    """
    An exhaustive enumeration would visit too many subsets.

    Attributes:
        subsets: Number of subsets the request would enumerate
        limit: Configured ceiling
    """

    def __init__(self, message: str, subsets: int, limit: int) -> None:
        super().__init__(message)
        self.subsets = subsets
        self.limit = limit


class DomainError(RectCrossError, ValueError):
    """Arguments fall outside the domain of a bound formula."""


class ParseError(RectCrossError, ValueError):
    """
    A drawing file is malformed.

    Attributes:
        line: 1-based line number of the offending line
    """

    def __init__(self, message: str, line: int) -> None:
        super().__init__(f"line {line}: {message}")
        self.line = line


class InconsistencyError(RectCrossError, RuntimeError):
    """A computed drawing contradicts a proven lower bound."""
