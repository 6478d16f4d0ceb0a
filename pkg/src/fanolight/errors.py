"""Exception types shared across the package."""

__all__ = [
    "FanolightError",
    "ZeroConductanceError",
    "NegativeConductanceError",
    "CapacityExceededError",
    "FileFormatError",
    "GridMismatchError",
    "StepOrderError",
    "BandOverlapError",
    "NormalizationWindowError",
    "InsufficientPointsError",
]


class FanolightError(Exception):
    """Base class for every domain error raised by this package."""


class ZeroConductanceError(FanolightError):
    """An operation is undefined at zero total transmission."""


class NegativeConductanceError(FanolightError):
    """A conductance below zero was supplied."""


class CapacityExceededError(FanolightError):
    """A conductance exceeds what the channel model can carry."""


class FileFormatError(FanolightError):
    """Malformed tabular text input. Carries the offending 1-based line."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


class GridMismatchError(FanolightError):
    """Spectra in one map do not share a common energy grid."""


class StepOrderError(FanolightError):
    """Record step indices are not strictly increasing."""


class BandOverlapError(FanolightError):
    """An integration band contains no bins of the energy grid."""


class NormalizationWindowError(FanolightError):
    """The low-conductance window cannot anchor the yield normalization."""


class InsufficientPointsError(FanolightError):
    """Too few usable points for a fit."""
