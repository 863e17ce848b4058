"""Exception types shared by every fadinglab package"""


class FadingLabError(Exception):
    """Base class of the errors raised by fadinglab"""


class DomainError(FadingLabError, ValueError):
    """A parameter or argument lies outside the domain of the function"""


class NonConvergence(FadingLabError, ArithmeticError):
    """A series exhausted its term budget before meeting the stopping rule

    Args:
        message: human readable reason
        params: the series parameters being summed (PFQParams or a dict)
        terms: number of terms consumed
        partial_sum: the last partial sum (or log of it)
    """

    def __init__(self, message, params=None, terms=None, partial_sum=None):
        super().__init__(message)
        self.params = params
        self.terms = terms
        self.partial_sum = partial_sum


class QuadratureFailure(FadingLabError, ArithmeticError):
    """Adaptive quadrature could not reach the requested tolerance"""

    def __init__(self, message, interval=None, abserr=None, tol=None):
        super().__init__(message)
        self.interval = interval
        self.abserr = abserr
        self.tol = tol
