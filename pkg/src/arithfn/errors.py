"""Exceptions shared across the package."""


class UnknownNameError(KeyError):
    """A builtin, identity, or series preset name did not resolve."""


class ParseError(ValueError):
    """An expression string does not conform to the grammar."""


class OutOfDomainError(ValueError):
    """An evaluation point lies outside the supported region."""
