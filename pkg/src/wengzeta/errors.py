"""Exception types raised by the engine."""


class WengZetaError(Exception):
    """Base class for all input and domain errors."""


class InvalidCurve(WengZetaError, ValueError):
    """The curve datum violates a structural constraint (q, genus, symmetry)."""


class LengthMismatch(InvalidCurve):
    pass


class NonIntegralCoefficient(InvalidCurve):
    """Point counts do not come from any integral Weil polynomial."""


class UnsupportedGenus(WengZetaError, ValueError):
    pass


class PoleEvaluation(WengZetaError, ZeroDivisionError):
    """A rational function was evaluated at one of its poles."""

    def __init__(self, message, factor=None):
        super().__init__(message)
        self.factor = factor
