"""Exception hierarchy shared by the arithmetic and localization layers."""

from fractions import Fraction


class FoliDegError(Exception):
    """Base class for every error raised by this package."""


class ZeroDenominatorError(FoliDegError, ZeroDivisionError):
    def __init__(self, message="zero denominator"):
        super().__init__(message)


class NotIntegralError(FoliDegError, ValueError):
    """Raised when a value expected to be an integer has a denominator."""

    def __init__(self, value: Fraction):
        self.value = value
        super().__init__(f"not an integer: {value.numerator}/{value.denominator}")


class DegenerateWeightsError(ZeroDenominatorError):
    """Torus weights make some fixed point non-isolated (a zero tangent weight)."""

    def __init__(self, message="degenerate weights", weights=None):
        self.weights = weights
        super().__init__(message)


class WeightSearchExhausted(FoliDegError, RuntimeError):
    pass


class LocalizationInconsistency(FoliDegError, ArithmeticError):
    """A Bott sum that should be a degree came out non-integral.

    ``contributions`` holds the per-fixed-point terms for diagnosis.
    """

    def __init__(self, total: Fraction, contributions):
        self.total = total
        self.contributions = list(contributions)
        lines = [f"  {label}: {c.numerator}/{c.denominator}" for label, c in self.contributions]
        super().__init__(
            f"localization inconsistency: total {total.numerator}/{total.denominator}\n"
            + "\n".join(lines)
        )
