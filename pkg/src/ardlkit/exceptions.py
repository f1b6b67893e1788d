"""Exception types shared across the toolkit.

The CLI maps these onto exit codes: configuration problems exit 1, data
problems exit 2, numerical failures exit 3.
"""


class ArdlkitError(Exception):
    """Base class for all toolkit errors."""


class ConfigError(ArdlkitError):
    """Invalid pipeline or model configuration (bad field values, infeasible specs)."""


class DataError(ArdlkitError):
    """Malformed or unusable input data (CSV defects, misaligned series, domain errors)."""


class NumericalError(ArdlkitError):
    """Numerical failure during estimation (rank deficiency, singular covariance, ...)."""
