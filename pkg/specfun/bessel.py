"""Modified Bessel function of the first kind"""
import math

import numpy as np
from scipy import special

from .errors import DomainError
from .series import PFQParams, log_hyp_pfq

# above this argument the exponentially scaled scipy routine is used
SERIES_MAX_Z = 50.0


def log_bessel_i(nu, z, ctrl=None):
    """log I_nu(z) for nu > -1 and z >= 0

    Small arguments use the ascending series
    I_nu(z) = (z/2)^nu / Gamma(nu+1) * 0F1(nu+1; z^2/4); large arguments use
    log(ive(nu, z)) + z, which stays finite where I_nu(z) overflows.
    """
    if z < 0:
        raise DomainError('Bessel argument must be nonnegative, got {}'.format(z))
    if nu <= -1:
        raise DomainError('Bessel order must exceed -1, got {}'.format(nu))
    if z == 0.0:
        if nu == 0:
            return 0.0
        return -math.inf if nu > 0 else math.inf
    if z <= SERIES_MAX_Z:
        return (nu * math.log(0.5 * z) - float(special.gammaln(nu + 1.0))
                + log_hyp_pfq(PFQParams((), (nu + 1.0,), 0.25 * z * z), ctrl))
    return float(np.log(special.ive(nu, z))) + z


def bessel_i(nu, z, ctrl=None):
    """I_nu(z), inf when it overflows"""
    return float(np.exp(log_bessel_i(nu, z, ctrl)))
