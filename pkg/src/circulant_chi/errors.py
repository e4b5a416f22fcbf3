"""Exception hierarchy shared by every module of the package."""


class CirculantError(Exception):
    """Base class for all errors raised by circulant_chi."""


class InvalidOrderError(CirculantError, ValueError):
    """The number of vertices is below 2 (or above the bit-set width)."""


class ValidationError(CirculantError, ValueError):
    """A connection set or other user input is malformed."""


class NonUnitError(CirculantError, ValueError):
    """A multiplier is not invertible modulo n."""


class ParameterError(CirculantError, ValueError):
    """A verification routine was called outside the parameters it covers."""


class CapacityError(CirculantError):
    """The requested computation exceeds a configured size cap."""


class InternalError(CirculantError, ArithmeticError):
    """An internal consistency check failed (e.g. inexact division)."""
