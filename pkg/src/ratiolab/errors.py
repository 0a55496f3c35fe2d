"""Exception types shared across the package.

The CLI maps these onto exit codes: parameter/configuration problems exit
with 2, enumeration-guard refusals with 3.
"""


class RatioLabError(Exception):
    """Base class for all errors raised by this package."""


class ParameterError(RatioLabError, ValueError):
    """A value violates a documented invariant (bad n, k, alpha/beta pair, ...)."""


class EnumerationGuardError(RatioLabError):
    """Refusal to enumerate an exponentially large subset space."""


class MissingPlantError(RatioLabError):
    """An operation needed the hidden planted set but the instance has none."""


class UndefinedRatioError(RatioLabError, ZeroDivisionError):
    """The ratio objective was evaluated where the denominator is zero."""


class NoConsistentPlantError(RatioLabError):
    """Every candidate plant of the required cardinality was already queried."""
