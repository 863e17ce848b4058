"""Moments and amount of fading of the kappa-mu shadowed SNR"""
import math

from specfun.errors import DomainError
from specfun.series import PFQParams, hyp_pfq
from specfun.gamma import ln_gamma


def normalized_moment(p, n, ctrl=None):
    """E[(gamma / gamma_bar)^n] for any real n > -mu

    Gamma(mu+n)/Gamma(mu) ((mu k + m) / (mu m (1+k)))^n
        2F1(mu-m, -n; mu; mu k / (mu k + m))
    The series terminates for integer n >= 0.
    """
    if not n > -p.mu:
        raise DomainError('moment order must exceed -mu = {}, got {}'.format(-p.mu, n))
    kappa, mu, m = p.kappa, p.mu, p.m
    scale = (mu * kappa + m) / (mu * m * (1.0 + kappa))
    log_prefactor = ln_gamma(mu + n) - ln_gamma(mu) + n * math.log(scale)
    series = hyp_pfq(PFQParams((mu - m, -n), (mu,), p.series_argument), ctrl)
    return math.exp(log_prefactor) * series


def moment(p, n, ctrl=None):
    """E[gamma^n] of the kappa-mu shadowed SNR, n > 0"""
    if not n > 0:
        raise DomainError('moment order must be positive, got {}'.format(n))
    if n == 1:
        return p.gamma_bar
    return p.gamma_bar ** n * normalized_moment(p, n, ctrl)


def moment_direct(p, n, ctrl=None):
    """E[gamma^n] through the untransformed series 2F1(m, mu+n; mu; x)

    Gamma(mu+n)/Gamma(mu) gb^n m^m / (mu^n (1+k)^n (mu k + m)^m) 2F1(...)
    Every term is positive; it converges slowly when mu k / (mu k + m) -> 1.
    """
    if not n > 0:
        raise DomainError('moment order must be positive, got {}'.format(n))
    kappa, mu, m = p.kappa, p.mu, p.m
    log_prefactor = (ln_gamma(mu + n) - ln_gamma(mu) + n * math.log(p.gamma_bar)
                     - m * math.log1p(mu * kappa / m) - n * math.log(mu * (1.0 + kappa)))
    series = hyp_pfq(PFQParams((m, mu + n), (mu,), p.series_argument), ctrl)
    return math.exp(log_prefactor) * series


def amount_of_fading(p, n, ctrl=None):
    """n-th order amount of fading E[gamma^n] / gamma_bar^n - 1"""
    if not n > 0:
        raise DomainError('amount of fading needs n > 0, got {}'.format(n))
    if n == 1:
        return 0.0
    return normalized_moment(p, n, ctrl) - 1.0
