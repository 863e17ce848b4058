"""Gamma family: log-gamma, digamma and the upper incomplete gamma function"""
import math

import numpy as np
from scipy import special

from .errors import DomainError, NonConvergence


def ln_gamma(x):
    """log Gamma(x) for x > 0"""
    if not x > 0:
        raise DomainError('ln_gamma needs x > 0, got {}'.format(x))
    return float(special.gammaln(x))


def digamma(x):
    """psi(x) = d/dx log Gamma(x) for x > 0

    scipy shifts small arguments up with psi(x+1) = psi(x) + 1/x and
    finishes with the asymptotic expansion.
    """
    if not x > 0:
        raise DomainError('digamma needs x > 0, got {}'.format(x))
    return float(special.psi(x))


def _upper_positive(a, x):
    if x == 0.0:
        return math.exp(special.gammaln(a))
    q = special.gammaincc(a, x)
    if q == 0.0:
        return 0.0
    return float(np.exp(special.gammaln(a) + np.log(q)))


def upper_incomplete_gamma(a, x):
    """Gamma(a, x), the integral of t^(a-1) e^-t over [x, inf)

    Negative orders are reached from the nonnegative ones with the downward
    recurrence Gamma(a, x) = (Gamma(a+1, x) - x^a e^-x) / a.
    """
    if x < 0:
        raise DomainError('upper_incomplete_gamma needs x >= 0, got {}'.format(x))
    if a > 0:
        value = _upper_positive(a, x)
    elif x == 0.0:
        return math.inf
    else:
        steps = int(math.ceil(-a)) if not float(a).is_integer() else int(-a)
        base = a + steps
        value = float(special.exp1(x)) if base == 0 else _upper_positive(base, x)
        for k in range(steps - 1, -1, -1):
            order = a + k
            value = (value - x ** order * math.exp(-x)) / order
    if not math.isfinite(value):
        raise NonConvergence('Gamma({}, {}) is not representable'.format(a, x),
                             {'a': a, 'x': x})
    return value
