"""Generative descriptions of the kappa-mu shadowed SNR"""
import math
from dataclasses import dataclass

import numpy as np

from specfun.errors import DomainError
from channel_models.params import ShadowedParams


def _cluster_count(mu):
    if not (float(mu).is_integer() and mu >= 1):
        raise DomainError('physical engines need an integer cluster count mu >= 1, got {}'.format(mu))
    return int(mu)


def _check_severity(name, value):
    if not (math.isfinite(value) and value > 0):
        raise DomainError('{} must be positive, got {}'.format(name, value))


@dataclass(frozen=True)
class CommonShadow:
    """mu clusters z_i + xi rho_i sharing one Nakagami-m shadowing term xi

    z_i is circular complex Gaussian with variance sigma2 per component,
    |xi|^2 ~ Gamma(m, m) with uniform phase.
    """
    tag = 'common'
    mu: int
    sigma2: float
    rho: tuple
    m: float

    def __post_init__(self):
        object.__setattr__(self, 'mu', _cluster_count(self.mu))
        object.__setattr__(self, 'rho', tuple(complex(r) for r in self.rho))
        _check_severity('sigma2', self.sigma2)
        _check_severity('m', self.m)
        if len(self.rho) != self.mu:
            raise DomainError('need one dominant amplitude per cluster: {} for mu={}'.format(
                len(self.rho), self.mu))

    @property
    def dominant_power(self):
        return float(sum(abs(r) ** 2 for r in self.rho))

    @property
    def kappa(self):
        return self.dominant_power / (2.0 * self.sigma2 * self.mu)

    @property
    def mean_power(self):
        return self.dominant_power + 2.0 * self.sigma2 * self.mu

    def shadowed_params(self, gamma_bar=1.0):
        return ShadowedParams(self.kappa, float(self.mu), self.m, gamma_bar)

    def rotated(self, phase):
        """Same model with every dominant amplitude turned by ``phase``"""
        turn = complex(math.cos(phase), math.sin(phase))
        return CommonShadow(self.mu, self.sigma2, tuple(r * turn for r in self.rho), self.m)

    @classmethod
    def from_params(cls, p, sigma2=0.5):
        """Equal dominant power in every cluster, matching p.kappa and p.m"""
        mu = _cluster_count(p.mu)
        amplitude = math.sqrt(2.0 * sigma2 * p.kappa)
        return cls(mu, sigma2, (amplitude,) * mu, p.m)


@dataclass(frozen=True)
class IidShadow:
    """mu clusters z_i + xi_i rho, each with its own shadowing |xi_i|^2 ~ Gamma(m_hat, m_hat)

    The resulting SNR is kappa-mu shadowed with m = mu * m_hat.
    """
    tag = 'iid'
    mu: int
    sigma2: float
    rho_magnitude: float
    m_hat: float

    def __post_init__(self):
        object.__setattr__(self, 'mu', _cluster_count(self.mu))
        _check_severity('sigma2', self.sigma2)
        _check_severity('m_hat', self.m_hat)
        if not self.rho_magnitude >= 0:
            raise DomainError('rho_magnitude must be nonnegative, got {}'.format(self.rho_magnitude))

    @property
    def kappa(self):
        # every cluster carries |rho|^2 of dominant power, mu |rho|^2 in total
        return self.rho_magnitude ** 2 / (2.0 * self.sigma2)

    @property
    def m(self):
        return self.mu * self.m_hat

    @property
    def mean_power(self):
        return self.mu * (self.rho_magnitude ** 2 + 2.0 * self.sigma2)

    def shadowed_params(self, gamma_bar=1.0):
        return ShadowedParams(self.kappa, float(self.mu), self.m, gamma_bar)

    @classmethod
    def from_params(cls, p, sigma2=0.5):
        mu = _cluster_count(p.mu)
        return cls(mu, sigma2, math.sqrt(2.0 * sigma2 * p.kappa), p.m / mu)


@dataclass(frozen=True)
class ConditionalGamma:
    """Shadow power S ~ Gamma(m, m), N ~ Poisson(mu kappa S),
    SNR ~ Gamma(mu + N, rate mu (1+kappa) / gamma_bar); any real mu > 0

    ``fixed_shadow`` freezes S (S = 1 gives the unshadowed kappa-mu law).
    """
    tag = 'conditional'
    params: ShadowedParams
    fixed_shadow: float = None

    def __post_init__(self):
        if self.fixed_shadow is not None and not self.fixed_shadow > 0:
            raise DomainError('fixed_shadow must be positive, got {}'.format(self.fixed_shadow))

    @property
    def kappa(self):
        return self.params.kappa

    def shadowed_params(self, gamma_bar=None):
        return self.params if gamma_bar is None else self.params.with_gamma_bar(gamma_bar)


def draw_common_shadow(model, gamma_bar, size, rng):
    sigma = math.sqrt(model.sigma2)
    rho = np.asarray(model.rho)
    scatter = rng.normal(0.0, sigma, (size, model.mu)) + 1j * rng.normal(0.0, sigma, (size, model.mu))
    power = rng.gamma(model.m, 1.0 / model.m, size)
    xi = np.sqrt(power) * np.exp(1j * rng.uniform(0.0, 2.0 * np.pi, size))
    omega = np.sum(np.abs(scatter + xi[:, None] * rho[None, :]) ** 2, axis=1)
    return gamma_bar * omega / model.mean_power


def draw_iid_shadow(model, gamma_bar, size, rng):
    sigma = math.sqrt(model.sigma2)
    shape = (size, model.mu)
    scatter = rng.normal(0.0, sigma, shape) + 1j * rng.normal(0.0, sigma, shape)
    power = rng.gamma(model.m_hat, 1.0 / model.m_hat, shape)
    xi = np.sqrt(power) * np.exp(1j * rng.uniform(0.0, 2.0 * np.pi, shape))
    omega = np.sum(np.abs(scatter + xi * model.rho_magnitude) ** 2, axis=1)
    return gamma_bar * omega / model.mean_power


def draw_conditional(model, gamma_bar, size, rng):
    p = model.params
    if model.fixed_shadow is None:
        shadow = rng.gamma(p.m, 1.0 / p.m, size)
    else:
        shadow = np.full(size, float(model.fixed_shadow))
    clusters = rng.poisson(p.mu * p.kappa * shadow)
    return rng.gamma(p.mu + clusters, gamma_bar / (p.mu * (1.0 + p.kappa)))


DRAWS = {
    CommonShadow: draw_common_shadow,
    IidShadow: draw_iid_shadow,
    ConditionalGamma: draw_conditional,
}
