"""Exception types shared across the package."""


class ConfigError(Exception):
    """Malformed ring configuration or unparsable element/partition literal."""


class DomainError(Exception):
    """An operation was called outside its mathematical domain."""


class MissingDataError(Exception):
    """The ring lacks the optional (Adams / lambda) data the operation needs."""


class IntegralityError(Exception):
    """An element that must have integer coefficients does not.

    This always signals an implementation bug, never a bad input.
    """
