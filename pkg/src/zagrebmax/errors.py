"""Exception types shared across the package.

The CLI maps these onto distinct exit codes: DomainError -> 1,
ParseError -> 2, CapExceededError -> 3.
"""


class DomainError(Exception):
    """Input is well-formed but outside the operation's domain."""


class ParseError(Exception):
    """Input text could not be parsed."""


class CapExceededError(Exception):
    """A resource guard (enumeration size cap) refused the request."""


class ConstructionError(DomainError):
    """The layered construction cannot realize the sequence it was given."""
