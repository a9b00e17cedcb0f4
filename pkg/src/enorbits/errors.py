"""Exception types shared across the package.

All computational routines raise subclasses of :class:`EnorbitsError` for
invalid inputs; the CLI maps them to exit code 2.
"""


class EnorbitsError(Exception):
    """Base class for all input errors raised by this package."""


class SizeMismatch(EnorbitsError):
    """Two objects that must share the same size n do not."""


class OutOfRange(EnorbitsError):
    """A numeric argument is outside its documented bounds."""


class NotSquare(EnorbitsError):
    """A square matrix was required."""


class NotNilpotent(EnorbitsError):
    """A nilpotent matrix was required."""


class NotInvertible(EnorbitsError):
    """An invertible matrix was required."""


class InvalidQ(EnorbitsError):
    """The marker q is not admissible for the given partition."""


class NotDominant(EnorbitsError):
    """A weight was not given as a nonincreasing integer tuple."""


class ParseError(EnorbitsError):
    """Malformed textual or file input."""


class CharNotZero(EnorbitsError):
    """An operation defined only in characteristic zero got a prime field."""
