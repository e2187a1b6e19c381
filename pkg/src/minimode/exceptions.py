"""Exception hierarchy for mini-mode.

Every error derives from MinimodeError and carries the exit code the CLI
reports for it. Three families:

InputError: the data handed in cannot form a sample (exit code 2).
EstimationError: an estimator's precondition does not hold for the sample or
parameters it was given (exit code 3).
ConfigError: a study or run configuration is invalid (exit code 4).
"""


class MinimodeError(Exception):
    """Base class for all mini-mode errors."""

    exit_code: int = 1


class InputError(MinimodeError):
    """Raised when input data cannot be turned into a sample."""

    exit_code = 2


class EmptySample(InputError):
    """The sample has no observations."""


class NonFiniteValue(InputError):
    """The sample contains NaN or an infinity."""


class MalformedInput(InputError):
    """An input file could not be parsed."""


class EstimationError(MinimodeError):
    """Raised when an estimator cannot produce a value."""

    exit_code = 3


class KTooLarge(EstimationError):
    """Window size exceeds the sample size."""


class AlphaOutOfRange(EstimationError):
    """Fraction parameter outside the open interval (0, 1)."""


class NonPositiveWidth(EstimationError):
    """Modal interval width must be positive."""


class NonPositiveBandwidth(EstimationError):
    """Kernel bandwidth must be positive."""


class NonPositiveBinWidth(EstimationError):
    """Histogram bin width must be positive."""


class DegenerateScale(EstimationError):
    """The sample scale is zero or undefined."""


class ZeroSpacing(EstimationError):
    """A k-spacing is zero, so the spacing weights are undefined."""


class ParameterOrder(EstimationError):
    """Spacing parameters violate 1 < p < k < n."""


class NonPositiveData(EstimationError):
    """Power transforms need strictly positive data."""


class NegativeDiscriminant(EstimationError):
    """The fitted transform has no real density maximum."""


class SampleTooSmall(EstimationError):
    """The estimator needs more observations than were given."""


class NoHalfCrossing(EstimationError):
    """The density never falls to half its peak inside the search range."""


class DegenerateInitialScale(EstimationError):
    """The M-estimator initial scale is not positive."""


class UnknownEstimator(EstimationError):
    """No estimator is registered under the requested name."""


class ConfigError(MinimodeError):
    """Raised when a configuration is invalid."""

    exit_code = 4


class NonIntegralSplit(ConfigError):
    """epsilon * n is not an integer, so the contamination split is undefined."""


class InvalidConfig(ConfigError):
    """A merged configuration failed validation."""
