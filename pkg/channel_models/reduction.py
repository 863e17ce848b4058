"""Map every classic fading model onto kappa-mu shadowed parameters"""
import logging

from specfun.errors import DomainError
from .params import (ShadowedParams, LimitPolicy, Awgn, OneSidedGaussian, Rayleigh,
                     NakagamiM, NakagamiQ, Rician, KappaMu, EtaMu, RicianShadowed,
                     KappaMuShadowed)

LOG = logging.getLogger(__name__)

DEFAULT_POLICY = LimitPolicy()
TABLE_ROWS = ('a', 'b')


def hoyt_kappa(q):
    """kappa of a Hoyt channel, zero for q = 1"""
    return (1.0 - q * q) / (2.0 * q * q)


def eta_mu_folded(eta):
    """eta-mu is symmetric in eta <-> 1/eta; fold onto (0, 1]"""
    return 1.0 / eta if eta > 1.0 else eta


def _gamma_row(mu, gamma_bar, policy, row):
    # the 'b' rows are exact for any kappa, the 'a' rows only in the limit
    if row == 'a':
        return ShadowedParams(policy.kappa_zero, mu, policy.m_infinity, gamma_bar)
    return ShadowedParams(policy.kappa_zero, mu, mu, gamma_bar)


def reduce_to_shadowed(model, policy=None, row='b'):
    """Parameters (kappa, mu, m, gamma_bar) reproducing ``model``

    Args:
        model: a FadingModel variant
        policy: LimitPolicy supplying the m -> inf and kappa -> 0 surrogates
        row: 'b' maps one-sided Gaussian, Rayleigh and Nakagami-m through the
            exact m = mu rows, 'a' through the kappa -> 0, m -> inf rows

    Raises:
        DomainError: the model has no fading distribution (AWGN) or the row
            selector is unknown
    """
    policy = policy or DEFAULT_POLICY
    if row not in TABLE_ROWS:
        raise DomainError('row must be one of {}, got {!r}'.format(TABLE_ROWS, row))
    gamma_bar = model.gamma_bar

    if isinstance(model, OneSidedGaussian):
        return _gamma_row(0.5, gamma_bar, policy, row)
    if isinstance(model, Rayleigh):
        return _gamma_row(1.0, gamma_bar, policy, row)
    if isinstance(model, NakagamiM):
        return _gamma_row(model.m, gamma_bar, policy, row)
    if isinstance(model, NakagamiQ):
        kappa = max(hoyt_kappa(model.q), policy.kappa_zero)
        return ShadowedParams(kappa, 1.0, 0.5, gamma_bar)
    if isinstance(model, Rician):
        kappa = max(model.K, policy.kappa_zero)
        return ShadowedParams(kappa, 1.0, policy.m_infinity, gamma_bar)
    if isinstance(model, KappaMu):
        return ShadowedParams(model.kappa, model.mu, policy.m_infinity, gamma_bar)
    if isinstance(model, EtaMu):
        eta = eta_mu_folded(model.eta)
        kappa = (1.0 - eta) / (2.0 * eta)
        return ShadowedParams(kappa, 2.0 * model.mu, model.mu, gamma_bar)
    if isinstance(model, RicianShadowed):
        return ShadowedParams(model.K, 1.0, model.m, gamma_bar)
    if isinstance(model, KappaMuShadowed):
        return ShadowedParams(model.kappa, model.mu, model.m, gamma_bar)
    if isinstance(model, Awgn):
        raise DomainError('AWGN has no fading distribution to reduce')
    raise DomainError('unknown fading model {!r}'.format(model))


def is_limit_row(model, row='b'):
    """True when the reduction of ``model`` relies on a LimitPolicy surrogate"""
    if isinstance(model, (Rician, KappaMu)):
        return True
    if isinstance(model, (OneSidedGaussian, Rayleigh, NakagamiM)):
        return row == 'a'
    return False
