"""Power densities of the kappa-mu shadowed family and its special cases

Every density is assembled in log space and exponentiated once, so a huge
hypergeometric or Bessel factor meeting a tiny exponential does not overflow.
Densities accept a scalar or an array of SNR values.
"""
import logging
import math

import numpy as np
from scipy import stats

from specfun.errors import DomainError
from specfun.series import log_hyp1f1
from specfun.gamma import ln_gamma
from specfun.bessel import log_bessel_i
from utils.quadrature import integrate_pieces
from .params import (OneSidedGaussian, Rayleigh, NakagamiM, NakagamiQ, Rician, KappaMu,
                     EtaMu, RicianShadowed, KappaMuShadowed, ShadowedParams)

LOG = logging.getLogger(__name__)

TAIL_EPS = 1e-16
# fractions of the largest admissible Chernoff exponent tried by tail_bound
CHERNOFF_FRACTIONS = np.linspace(0.02, 0.98, 49)


def _elementwise(func, gamma):
    values = np.asarray(gamma, dtype=float)
    if np.any(values < 0) or np.any(np.isnan(values)):
        raise DomainError('SNR values must be nonnegative')
    if values.ndim == 0:
        return func(float(values))
    return np.array([func(g) for g in values.ravel()]).reshape(values.shape)


def _at_origin(power, log_norm):
    """Density at gamma = 0 when it behaves like gamma^power near the origin"""
    if power > 0:
        return 0.0
    if power < 0:
        return math.inf
    return math.exp(log_norm)


def pdf_gamma(alpha, beta, w):
    """Gamma density with shape alpha and rate beta"""
    if not (alpha > 0 and beta > 0):
        raise DomainError('gamma density needs alpha, beta > 0, got {}, {}'.format(alpha, beta))
    values = np.asarray(w, dtype=float)
    if np.any(values < 0):
        raise DomainError('gamma density argument must be nonnegative')
    density = stats.gamma.pdf(values, alpha, scale=1.0 / beta)
    return float(density) if density.ndim == 0 else density


def log_pdf_kappa_mu_shadowed(p, gamma, ctrl=None):
    """log of the kappa-mu shadowed density at a single SNR value"""
    kappa, mu, m = p.kappa, p.mu, p.m
    log_norm = (mu * math.log(mu) + mu * math.log1p(kappa) - ln_gamma(mu)
                - math.log(p.gamma_bar) - m * math.log1p(mu * kappa / m))
    if gamma == 0.0:
        value = _at_origin(mu - 1.0, log_norm)
        return math.log(value) if value > 0 else -math.inf
    x = gamma / p.gamma_bar
    z = mu * mu * kappa * (1.0 + kappa) / (mu * kappa + m) * x
    return (log_norm + (mu - 1.0) * math.log(x) - mu * (1.0 + kappa) * x
            + log_hyp1f1(m, mu, z, ctrl))


def pdf_kappa_mu_shadowed(p, gamma, ctrl=None):
    """Density of the kappa-mu shadowed SNR

    f(g) = mu^mu m^m (1+k)^mu / (Gamma(mu) gb (mu k + m)^m) (g/gb)^(mu-1)
           exp(-mu (1+k) g/gb) 1F1(m; mu; mu^2 k (1+k) / (mu k + m) g/gb)

    At g = 0 the density is 0 for mu > 1, finite for mu = 1 and inf for mu < 1.
    """
    return _elementwise(lambda g: math.exp(log_pdf_kappa_mu_shadowed(p, g, ctrl)), gamma)


def _log_pdf_kappa_mu(kappa, mu, gamma_bar, gamma, ctrl):
    log_norm = (math.log(mu) + 0.5 * (mu + 1.0) * math.log1p(kappa) - math.log(gamma_bar)
                - 0.5 * (mu - 1.0) * math.log(kappa) - mu * kappa)
    if gamma == 0.0:
        value = _at_origin(mu - 1.0, log_norm)
        return math.log(value) if value > 0 else -math.inf
    x = gamma / gamma_bar
    return (log_norm + 0.5 * (mu - 1.0) * math.log(x) - mu * (1.0 + kappa) * x
            + log_bessel_i(mu - 1.0, 2.0 * mu * math.sqrt(kappa * (1.0 + kappa) * x), ctrl))


def pdf_kappa_mu(kappa, mu, gamma_bar, gamma, ctrl=None):
    """Density of the kappa-mu SNR (Bessel form); kappa = 0 is Gamma(mu, mu/gb)"""
    if not (kappa >= 0 and mu > 0 and gamma_bar > 0):
        raise DomainError('kappa-mu needs kappa >= 0, mu > 0, gamma_bar > 0')
    if kappa == 0.0:
        return pdf_gamma(mu, mu / gamma_bar, gamma)
    return _elementwise(
        lambda g: math.exp(_log_pdf_kappa_mu(kappa, mu, gamma_bar, g, ctrl)), gamma)


def _log_pdf_eta_mu(eta, mu, gamma_bar, gamma, ctrl):
    nu = mu - 0.5
    log_norm = (0.5 * math.log(math.pi) + (mu + 0.5) * math.log1p(eta) + (mu + 0.5) * math.log(mu)
                - ln_gamma(mu) - math.log(gamma_bar) - 0.5 * math.log(eta)
                - nu * math.log(abs(1.0 - eta)))
    if gamma == 0.0:
        value = _at_origin(2.0 * mu - 1.0, log_norm)
        return math.log(value) if value > 0 else -math.inf
    x = gamma / gamma_bar
    argument = mu * abs(1.0 - eta * eta) / (2.0 * eta) * x
    return (log_norm + nu * math.log(x) - mu * (1.0 + eta) ** 2 / (2.0 * eta) * x
            + log_bessel_i(nu, argument, ctrl))


def pdf_eta_mu(eta, mu, gamma_bar, gamma, ctrl=None):
    """Density of the eta-mu SNR, format 1

    f(g) = 2 sqrt(pi) mu^(mu+1/2) h^mu / (Gamma(mu) H^(mu-1/2) gb) (g/gb)^(mu-1/2)
           exp(-2 mu h g/gb) I_(mu-1/2)(2 mu H g/gb)
    with h = (2 + 1/eta + eta)/4 and H = (1/eta - eta)/4, rewritten in eta.
    eta = 1 is Gamma(2 mu, 2 mu / gb).
    """
    if not (eta > 0 and mu > 0 and gamma_bar > 0):
        raise DomainError('eta-mu needs eta > 0, mu > 0, gamma_bar > 0')
    if eta == 1.0:
        return pdf_gamma(2.0 * mu, 2.0 * mu / gamma_bar, gamma)
    return _elementwise(
        lambda g: math.exp(_log_pdf_eta_mu(eta, mu, gamma_bar, g, ctrl)), gamma)


def pdf_native(model, gamma, ctrl=None):
    """Density of ``model`` written in its own parametrization"""
    gb = model.gamma_bar
    if isinstance(model, OneSidedGaussian):
        return pdf_gamma(0.5, 0.5 / gb, gamma)
    if isinstance(model, Rayleigh):
        return pdf_gamma(1.0, 1.0 / gb, gamma)
    if isinstance(model, NakagamiM):
        return pdf_gamma(model.m, model.m / gb, gamma)
    if isinstance(model, NakagamiQ):
        return pdf_eta_mu(model.q * model.q, 0.5, gb, gamma, ctrl)
    if isinstance(model, Rician):
        return pdf_kappa_mu(model.K, 1.0, gb, gamma, ctrl)
    if isinstance(model, KappaMu):
        return pdf_kappa_mu(model.kappa, model.mu, gb, gamma, ctrl)
    if isinstance(model, EtaMu):
        return pdf_eta_mu(model.eta, model.mu, gb, gamma, ctrl)
    if isinstance(model, RicianShadowed):
        return pdf_kappa_mu_shadowed(ShadowedParams(model.K, 1.0, model.m, gb), gamma, ctrl)
    if isinstance(model, KappaMuShadowed):
        return pdf_kappa_mu_shadowed(
            ShadowedParams(model.kappa, model.mu, model.m, gb), gamma, ctrl)
    raise DomainError('{} has no density'.format(type(model).__name__))


def tail_bound(p, eps=TAIL_EPS):
    """An SNR above which at most ``eps`` of the probability lies

    gamma gb^-1 mu (1+k) is Gamma(mu + N, 1) with N ~ Poisson(mu k S) and
    S ~ Gamma(m, m), whose moment generating function is
    (1-t)^-mu (1 - mu k t / (m (1-t)))^-m for t < m / (m + mu k).
    The Chernoff bound is minimized over a grid of t.
    """
    kappa, mu, m = p.kappa, p.mu, p.m
    t = CHERNOFF_FRACTIONS * m / (m + mu * kappa)
    log_mgf = -mu * np.log1p(-t) - m * np.log1p(-mu * kappa * t / (m * (1.0 - t)))
    bound = np.min((log_mgf - math.log(eps)) / t)
    return p.gamma_bar * bound / (mu * (1.0 + kappa))


def _breakpoints(gamma_bar, upper):
    return [b for b in gamma_bar * np.array([1e-3, 1e-1, 1.0, 10.0]) if b < upper]


def cdf_numeric(p, gamma, tol=1e-10, ctrl=None):
    """P(SNR <= gamma) by adaptive quadrature of the density

    Beyond tail_bound(p) the remaining mass is below the tolerance, so the
    integral is cut there.

    Raises:
        QuadratureFailure
    """
    if gamma < 0:
        raise DomainError('cdf needs gamma >= 0, got {}'.format(gamma))
    if gamma == 0.0:
        return 0.0
    upper = min(gamma, tail_bound(p, 0.1 * tol))
    value, _ = integrate_pieces(lambda g: pdf_kappa_mu_shadowed(p, g, ctrl), 0.0, upper, tol,
                                _breakpoints(p.gamma_bar, upper))
    return min(max(value, 0.0), 1.0)


def cumulative_table(density, grid, tol=1e-10):
    """CDF of ``density`` on an increasing grid starting at 0

    Each grid interval is integrated separately and the pieces accumulated.
    """
    grid = np.asarray(grid, dtype=float)
    if grid[0] != 0.0 or np.any(np.diff(grid) <= 0):
        raise DomainError('cumulative_table needs an increasing grid starting at 0')
    pieces = [integrate_pieces(density, a, b, tol)[0] for a, b in zip(grid[:-1], grid[1:])]
    return np.concatenate(([0.0], np.cumsum(pieces)))
