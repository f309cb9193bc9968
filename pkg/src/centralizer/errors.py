"""Exception hierarchy for the centralizer package.

Library code raises these; the job runner and the CLI turn them into
results and exit statuses.
"""

from typing import Optional


class CentralizerError(Exception):
    """Base class for every error raised by this package."""


class SpinError(CentralizerError, ValueError):
    """A spin string or value is not a nonnegative half-integer."""


class SpinCapError(SpinError):
    """A spin exceeds the configured cap (twice-spin encoding)."""

    def __init__(self, twice: int, cap: int):
        super().__init__(f"spin {twice}/2 exceeds the configured cap {cap}/2")
        self.twice = twice
        self.cap = cap


class ExcludedCaseError(CentralizerError):
    """The requested parameters fall in a documented excluded case."""


class InconclusiveError(CentralizerError):
    """No closure certificate was found within the degree budget.

    This never means the statement is false; raising the degree bound may
    still certify it.
    """

    def __init__(self, message: str, degree: Optional[int] = None):
        super().__init__(message)
        self.degree = degree


class ReductionError(CentralizerError):
    """A product did not reduce into the span of a candidate basis."""


class SpectrumError(CentralizerError):
    """A minimal polynomial does not split over the candidate eigenvalues."""


class EmptyCharacterError(CentralizerError):
    """Fixing the central generator leaves a characteristic relation without roots."""


class PresentationSyntaxError(CentralizerError, ValueError):
    """A relation or presentation document could not be parsed."""


class SettingsError(CentralizerError):
    """The configuration file or an override is invalid."""


__all__ = [
    "CentralizerError",
    "SpinError",
    "SpinCapError",
    "ExcludedCaseError",
    "InconclusiveError",
    "ReductionError",
    "SpectrumError",
    "EmptyCharacterError",
    "PresentationSyntaxError",
    "SettingsError",
]
