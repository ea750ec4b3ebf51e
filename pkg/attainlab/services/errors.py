"""Domain exceptions raised by the toolkit services."""
from typing import Any, Optional, Tuple


class AttainlabError(Exception):
    """Base class for every error the toolkit raises on purpose."""

    def __init__(self, message: str):
        super().__init__(message)
        self.message = message


class InvalidArgumentError(AttainlabError):
    """An argument or a domain object violates its contract."""


class RangeOverflowError(AttainlabError, OverflowError):
    """A value left the double-precision range."""


class BoundaryTooCloseError(AttainlabError):
    """A root lies on or too near the boundary of a search rectangle."""

    def __init__(self, message: str, region: Tuple[float, float, float, float], min_abs: float):
        super().__init__(message)
        self.region = region
        self.min_abs = min_abs


class QuadratureError(AttainlabError):
    """A quadrature failed to converge."""

    def __init__(self, message: str, diagnostics: Optional[dict] = None):
        super().__init__(message)
        self.diagnostics = diagnostics or {}


class IllConditionedFamilyError(AttainlabError):
    """A Gram section is too close to singular to be inverted."""

    def __init__(self, message: str, margin: float, threshold: float):
        super().__init__(message)
        self.margin = margin
        self.threshold = threshold


class ModelValidationError(AttainlabError):
    """A model file does not match its schema."""

    def __init__(self, message: str, path: Any = None):
        super().__init__(message)
        self.path = path
