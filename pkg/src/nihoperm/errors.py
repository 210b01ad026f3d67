"""Exception hierarchy for nihoperm."""


class NihoError(Exception):
    pass


class ModulusError(NihoError, ValueError):
    """Modulus is reducible or has the wrong degree."""


class RangeError(NihoError, ValueError):
    """A size parameter (m, row number, ...) is outside the supported range."""


class DivisionByZero(NihoError, ZeroDivisionError):
    pass


class FractionError(NihoError, ValueError):
    """Denominator is not invertible modulo 2^m + 1, or the literal is malformed."""


class ConsistencyError(NihoError, RuntimeError):
    """Two independent computations of the same quantity disagree."""


class DomainError(NihoError, ValueError):
    pass


class DegenerateMapError(NihoError, ValueError):
    """Linear fractional map with vanishing determinant."""


class PreconditionError(NihoError, ValueError):
    def __init__(self, message, condition=None):
        super().__init__(message)
        self.condition = condition
