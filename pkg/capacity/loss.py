"""High-SNR ergodic capacity loss with respect to AWGN

The ergodic capacity behaves as log2(gamma_bar) - L for large gamma_bar;
L = -log2(e) d/dn AF(n) at n = 0, with AF the amount of fading.
"""
import logging
import math
from dataclasses import dataclass

import numpy as np

from specfun.errors import DomainError
from specfun.series import PFQParams, hyp_pfq
from specfun.gamma import digamma, upper_incomplete_gamma
from channel_models.params import (FadingModel, Awgn, OneSidedGaussian, Rayleigh, NakagamiM,
                                   NakagamiQ, Rician, KappaMu, EtaMu, RicianShadowed,
                                   KappaMuShadowed)
from channel_models.reduction import eta_mu_folded
from utils.quadrature import integrate_unit_weighted

LOG = logging.getLogger(__name__)

LOG2E = 1.0 / math.log(2.0)
RAYLEIGH_LOSS = np.euler_gamma * LOG2E
# above this mu kappa the alternating 2F2 series of the kappa-mu loss cancels badly
KAPPA_MU_SERIES_MAX = 10.0


@dataclass(frozen=True)
class CapacityLoss:
    loss_bits: float
    model: FadingModel


def loss_kappa_mu_shadowed(kappa, mu, m, ctrl=None):
    """L = -log2(e) psi(mu) - log2((mu k + m) / (mu m (1+k)))
           + log2(e) k (mu-m) / (mu k + m) 3F2(1, 1, mu-m+1; 2, mu+1; mu k / (mu k + m))

    Raises:
        NonConvergence: the 3F2 argument is too close to 1 for the term budget
    """
    model = KappaMuShadowed(kappa, mu, m)
    loss = -LOG2E * digamma(mu) - math.log2((mu * kappa + m) / (mu * m * (1.0 + kappa)))
    if kappa > 0 and mu != m:
        x = mu * kappa / (mu * kappa + m)
        series = hyp_pfq(PFQParams((1.0, 1.0, mu - m + 1.0), (2.0, mu + 1.0), x), ctrl)
        loss += LOG2E * kappa * (mu - m) / (mu * kappa + m) * series
    return CapacityLoss(loss, model)


def _kappa_times_2f2(kappa, mu, ctrl):
    """kappa 2F2(1, 1; 2, mu+1; -mu kappa)

    For large mu kappa the integral
    int_0^1 (1 - exp(-mu kappa s)) (1-s)^(mu-1) / s ds is used instead.
    """
    x = mu * kappa
    if x <= KAPPA_MU_SERIES_MAX:
        return kappa * hyp_pfq(PFQParams((1.0, 1.0), (2.0, mu + 1.0), -x), ctrl)

    def integrand(s):
        return -math.expm1(-x * s) / s if s > 0 else x
    value, _ = integrate_unit_weighted(integrand, 0.0, mu - 1.0)
    return value


def loss_kappa_mu(kappa, mu, ctrl=None):
    """L = -log2(e) psi(mu) + log2(mu) + log2(1+k) - log2(e) k 2F2(1, 1; 2, mu+1; -mu k)"""
    model = KappaMu(kappa, mu)
    loss = -LOG2E * digamma(mu) + math.log2(mu) + math.log2(1.0 + kappa)
    if kappa > 0:
        loss -= LOG2E * _kappa_times_2f2(kappa, mu, ctrl)
    return CapacityLoss(loss, model)


def loss_eta_mu(eta, mu, ctrl=None, use_symmetry=True):
    """L = -log2(e) psi(2mu) + log2(mu) + log2(1+eta)
           + log2(e) (1-eta)/2 3F2(1, 1, mu+1; 2, 2mu+1; 1-eta)

    With ``use_symmetry`` eta > 1 is folded onto 1/eta first; otherwise eta
    in (1, 2) is summed directly on the alternating series.
    """
    model = EtaMu(eta, mu)
    if use_symmetry:
        eta = eta_mu_folded(eta)
    elif eta >= 2.0:
        raise DomainError('direct eta-mu loss needs eta < 2, got {}'.format(eta))
    loss = -LOG2E * digamma(2.0 * mu) + math.log2(mu) + math.log2(1.0 + eta)
    if eta != 1.0:
        series = hyp_pfq(PFQParams((1.0, 1.0, mu + 1.0), (2.0, 2.0 * mu + 1.0), 1.0 - eta), ctrl)
        loss += LOG2E * 0.5 * (1.0 - eta) * series
    return CapacityLoss(loss, model)


def _rician_loss(K):
    if K == 0:
        return RAYLEIGH_LOSS
    return math.log2(1.0 + 1.0 / K) - LOG2E * upper_incomplete_gamma(0.0, K)


def _rician_shadowed_loss(K, m, ctrl):
    loss = RAYLEIGH_LOSS - math.log2((K + m) / (m * (1.0 + K)))
    if K > 0 and m != 1.0:
        series = hyp_pfq(PFQParams((1.0, 1.0, 2.0 - m), (2.0, 2.0), K / (K + m)), ctrl)
        loss += LOG2E * K * (1.0 - m) / (K + m) * series
    return loss


def loss_table2(model, ctrl=None):
    """Closed-form capacity loss of a classic or generalized fading model"""
    if isinstance(model, Awgn):
        loss = 0.0
    elif isinstance(model, OneSidedGaussian):
        loss = 1.0 + RAYLEIGH_LOSS
    elif isinstance(model, Rayleigh):
        loss = RAYLEIGH_LOSS
    elif isinstance(model, NakagamiM):
        loss = math.log2(model.m) - LOG2E * digamma(model.m)
    elif isinstance(model, NakagamiQ):
        q = model.q
        loss = 1.0 + RAYLEIGH_LOSS + math.log2((1.0 + q * q) / (1.0 + q) ** 2)
    elif isinstance(model, Rician):
        loss = _rician_loss(model.K)
    elif isinstance(model, KappaMu):
        loss = loss_kappa_mu(model.kappa, model.mu, ctrl).loss_bits
    elif isinstance(model, EtaMu):
        loss = loss_eta_mu(model.eta, model.mu, ctrl).loss_bits
    elif isinstance(model, RicianShadowed):
        loss = _rician_shadowed_loss(model.K, model.m, ctrl)
    elif isinstance(model, KappaMuShadowed):
        loss = loss_kappa_mu_shadowed(model.kappa, model.mu, model.m, ctrl).loss_bits
    else:
        raise DomainError('unknown fading model {!r}'.format(model))
    LOG.debug('capacity loss of %s: %.12g', model, loss)
    return CapacityLoss(loss, model)
