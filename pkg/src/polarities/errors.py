"""Exception hierarchy shared by every module."""


class PolarityError(Exception):
    """Base class for all errors raised by this package."""


class DimensionError(PolarityError, ValueError):
    """A subset or relation does not fit the carrier it is used with."""


class EndpointMismatch(PolarityError, ValueError):
    """Two morphisms do not share the polarity they are composed or compared through."""


class IncompatibleRelation(PolarityError, ValueError):
    """A relation fails the compatibility conditions for its endpoints."""


class CapExceeded(PolarityError, RuntimeError):
    """An exhaustive enumeration would exceed the configured size cap."""


class NotALattice(PolarityError, ValueError):
    """An order table is not a finite complete lattice."""


class ParseError(PolarityError, ValueError):
    """A context, morphism or lattice file could not be read."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class HeaderError(ParseError):
    """The Burmeister header is malformed."""


class CountMismatch(ParseError):
    """Declared counts disagree with the names or rows present."""


class IllegalRowCharacter(ParseError):
    """An incidence row holds something other than ``X`` or ``.``."""
