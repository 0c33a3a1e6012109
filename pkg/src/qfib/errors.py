"""Exception types shared across the package.

Everything raised on bad input derives from QfibError so the CLI can map
library failures onto its usage exit code in one place.
"""


class QfibError(Exception):
    """Base class for all qfib errors."""


class RingMismatchError(QfibError, ValueError):
    """Two polynomials from rings with different numbers of z variables."""


class CapacityError(QfibError, OverflowError):
    """An exponent would overflow its field in the packed term key."""


class InvalidShiftError(QfibError, ValueError):
    """A z -> z*q^e substitution with a negative exponent."""


class PolyParseError(QfibError, ValueError):
    """Syntax error in the polynomial text grammar."""

    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


class DomainError(QfibError, ValueError):
    """Arguments outside an operation's mathematical domain."""


class UnsupportedSchemeError(QfibError, ValueError):
    """A statistic/family pair that has no tile-local weight scheme."""


class SizeLimitError(QfibError, ValueError):
    """A desk-scale guard was exceeded (determinant size, path enumeration)."""
