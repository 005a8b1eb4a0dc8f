"""Exception types shared across the library.

The CLI maps ConfigError to exit code 2 and verification failures to exit
code 1; everything else is a bug and propagates as-is.
"""


class GftrlError(Exception):
    """Base class for library errors."""


class ConfigError(GftrlError):
    """Invalid configuration value or key."""


class DimensionError(GftrlError):
    """Vector or matrix shape does not match the game."""


class DomainError(GftrlError):
    """Input lies outside the regularizer's domain."""


class UnboundedError(GftrlError):
    """Requested a bounded quantity on an unbounded domain."""


class NoInteriorEquilibriumError(GftrlError):
    """Linear solve for an interior Nash point failed or left the simplex."""


class UnsupportedMetricError(GftrlError):
    """Metric requires data the trace or game does not provide."""
