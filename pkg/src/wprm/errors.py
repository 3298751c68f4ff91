"""Exception hierarchy shared by every module of the package."""


class WPRMError(Exception):
    """Base class for all errors raised by :mod:`wprm`."""


class InvalidInput(WPRMError, ValueError):
    """Malformed arguments (bad field size, zero vector, unparsable text...)."""


class NotAPrimePower(InvalidInput):
    pass


class DivisionByZero(WPRMError, ZeroDivisionError):
    pass


class LogOfZero(WPRMError, ValueError):
    pass


class ZeroVector(InvalidInput):
    pass


class DegreeMismatch(InvalidInput):
    pass


class EmptyDegree(InvalidInput):
    """No nonzero weighted-homogeneous polynomial exists in the requested degree."""


class DegreeNotDivisible(InvalidInput):
    pass


class BadAlphas(InvalidInput):
    pass


class HypothesisViolated(WPRMError):
    """A formula was requested outside the hypotheses under which it is proven."""


class PointCountMismatch(WPRMError, AssertionError):
    """The number of enumerated classes differs from p_m; the equivalence test is wrong."""


class RegularityNotFound(WPRMError):
    pass


class UnstableFootprint(WPRMError):
    pass


class PolynomialInIdeal(WPRMError):
    pass


class BudgetExceeded(WPRMError):
    def __init__(self, required: int, budget: int):
        super().__init__(f"exhaustive search needs {required} classes, budget is {budget}")
        self.required = required
        self.budget = budget


class WitnessMismatch(WPRMError, AssertionError):
    """A constructed polynomial does not have the number of zeros its construction promises."""
