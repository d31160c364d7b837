"""Exception hierarchy shared by every swagnet module."""


class SwagError(Exception):
    """Base class for all errors raised by swagnet."""


class DimensionError(SwagError, ValueError):
    """Operand shapes do not line up."""


class ConfigError(SwagError, ValueError):
    """A configuration value is out of range or inconsistent."""


class DomainError(SwagError, ValueError):
    """An input lies outside the domain of the operation."""


class FormatError(SwagError, ValueError):
    """A file or document does not follow its expected format."""


class StateError(SwagError, RuntimeError):
    """An operation was called in the wrong order (e.g. backward before forward)."""


class NumericError(SwagError, ArithmeticError):
    """A NaN or infinity appeared where finite values are required."""


# Errors caused by what the user passed in, as opposed to failures while running.
INPUT_ERRORS = (DimensionError, ConfigError, DomainError, FormatError)
