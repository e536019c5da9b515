"""Exception types raised across the package."""


class TorsionCosetError(Exception):
    """Base class for all package errors."""


class ZeroPolynomial(TorsionCosetError, ValueError):
    pass


class DegenerateElimination(TorsionCosetError, ValueError):
    pass


class UnsupportedDimension(TorsionCosetError, ValueError):
    pass


class RankDeficient(TorsionCosetError, ValueError):
    pass


class ToricUnavailable(TorsionCosetError, ValueError):
    """Newton polytope has zero normalized volume."""


class CapTooLarge(TorsionCosetError):
    """The enumeration grid implied by the exponent bounds exceeds the budget."""


class BoundViolation(TorsionCosetError):
    """An enumerated count exceeded a proven bound; signals a bug."""


class ParseError(TorsionCosetError, ValueError):
    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position
