"""Exception types shared across the package."""


class ModeError(TypeError):
    """Exact and float operands were mixed."""


class UnsupportedModeError(ValueError):
    """The operation is not available in the requested arithmetic mode."""


class DimensionError(ValueError):
    pass


class DegreeOverflowError(ArithmeticError):
    """A polynomial degree exceeded the configured cap."""


class PrecisionError(ArithmeticError):
    """A truncated Laurent series ran out of known coefficients."""


class CarrierError(TypeError):
    """An operator was applied to an element outside its carrier algebra."""


class TieError(ValueError):
    """Two operators in a time-ordered product carry the same time."""


class ConvergenceError(ArithmeticError):
    """An iterated expansion did not settle within its term budget."""

    def __init__(self, message, diagnostics=None):
        super().__init__(message)
        self.diagnostics = diagnostics or {}


class NotInvertibleError(ArithmeticError):
    def __init__(self, message, index=None):
        super().__init__(message)
        self.index = index


class PreconditionError(ValueError):
    pass


class TruncationError(ValueError):
    """A sequence is supported beyond the horizon of a truncated operator."""
