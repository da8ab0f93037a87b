"""Exception hierarchy shared across the toolkit.

Everything raised on purpose derives from SoleposeError so callers can
distinguish toolkit failures from programming mistakes.
"""


class SoleposeError(Exception):
    """Base class for all toolkit errors."""


class LengthMismatch(SoleposeError, ValueError):
    """Paired sequences have different lengths."""


class TimestampMismatch(SoleposeError, ValueError):
    """Paired streams disagree on sample timestamps."""


class TooShort(SoleposeError, ValueError):
    """Not enough samples for the requested operation."""


class NonUniformSampling(SoleposeError, ValueError):
    """Timestamp gaps differ from the declared sampling period."""


class NegativePressure(SoleposeError, ValueError):
    """A pressure value is below zero."""


class NonFiniteValue(SoleposeError, ValueError):
    """NaN or infinity where a finite number is required."""


class OutOfRange(SoleposeError, ValueError):
    """Requested grid or index span extends beyond the available data."""


class EmptySeries(SoleposeError, ValueError):
    """A raw series contains no samples."""


class NoOverlap(SoleposeError, ValueError):
    """Two streams share no common time span."""


class EmptySelection(SoleposeError, ValueError):
    """No pixel passed the correlation filter."""


class ZeroVariance(SoleposeError, ValueError):
    """A channel is constant where variability is required."""


class ChannelMismatch(SoleposeError, ValueError):
    """Channel count differs from the fitted parameters."""


class DimensionMismatch(SoleposeError, ValueError):
    """Matrix or vector shapes are inconsistent."""


class NumericalFailure(SoleposeError, ArithmeticError):
    """A numerical routine failed; should not occur on valid input."""


class TooSmall(SoleposeError, ValueError):
    """Sample too small for the statistical test."""


class TooLarge(SoleposeError, ValueError):
    """Sample too large for the statistical test."""


class DegenerateSample(SoleposeError, ValueError):
    """All values in a sample are equal."""


class DegenerateBoth(SoleposeError, ValueError):
    """Both samples are constant; the test statistic is undefined."""


class InsufficientGroup(SoleposeError, ValueError):
    """A comparison group has fewer reports than required."""


class ParseError(SoleposeError, ValueError):
    """A file could not be parsed; carries the offending 1-based line."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class HeaderMismatch(SoleposeError, ValueError):
    """File header differs from the fixed expected header."""


class VersionMismatch(SoleposeError, ValueError):
    """File format version is not supported."""


class IoFailure(SoleposeError, OSError):
    """Underlying file operation failed."""


class ManifestError(SoleposeError, ValueError):
    """A run manifest is missing files or carries invalid configuration."""
