"""Exception types shared across the library."""


class DrinfeldLabError(Exception):
    """Base class for all library errors."""


class NotPrime(DrinfeldLabError):
    pass


class FieldTooSmall(DrinfeldLabError):
    pass


class NotIrreducibleModulus(DrinfeldLabError):
    pass


class ContextMismatch(DrinfeldLabError):
    pass


class DivisionByZero(DrinfeldLabError, ZeroDivisionError):
    pass


class RingMismatch(DrinfeldLabError):
    pass


class DegreeZeroInput(DrinfeldLabError):
    pass


class EnumerationCapExceeded(DrinfeldLabError):
    pass


class DegreeCapExceeded(DrinfeldLabError):
    pass


class NotInvertible(DrinfeldLabError):
    """Raised when inversion fails; carries the offending gcd."""

    def __init__(self, message, gcd=None):
        super().__init__(message)
        self.gcd = gcd


class NotAField(DrinfeldLabError):
    pass


class ZeroPolynomial(DrinfeldLabError):
    pass


class NoSolution(DrinfeldLabError):
    pass


class WrongRank(DrinfeldLabError):
    pass


class WrongDegree(DrinfeldLabError):
    pass


class ZeroJInvariant(DrinfeldLabError):
    pass


class NotGoodReduction(DrinfeldLabError):
    pass


class BruteCapExceeded(DrinfeldLabError):
    pass


class NotCoprime(DrinfeldLabError):
    pass


class CapExceeded(DrinfeldLabError):
    pass


class InsufficientPrimes(DrinfeldLabError):
    pass


class NotInOmegaTilde(DrinfeldLabError):
    pass


class ParamsOutOfRange(DrinfeldLabError):
    pass


class InternalInconsistency(DrinfeldLabError):
    """Two supposedly-agreeing computations disagreed; indicates a bug."""
