"""Parameter records of the kappa-mu shadowed family and its special cases"""
import dataclasses
import math
from dataclasses import dataclass
from typing import ClassVar

from specfun.errors import DomainError


def _require(condition, message):
    if not condition:
        raise DomainError(message)


def _positive(name, value):
    _require(math.isfinite(value) and value > 0, '{} must be positive, got {}'.format(name, value))


def _nonnegative(name, value):
    _require(math.isfinite(value) and value >= 0, '{} must be nonnegative, got {}'.format(name, value))


@dataclass(frozen=True)
class ShadowedParams:
    """kappa: dominant-to-scattered power ratio, mu: cluster parameter,
    m: shadowing severity, gamma_bar: mean SNR (linear)"""
    kappa: float
    mu: float
    m: float
    gamma_bar: float = 1.0

    def __post_init__(self):
        _nonnegative('kappa', self.kappa)
        _positive('mu', self.mu)
        _positive('m', self.m)
        _positive('gamma_bar', self.gamma_bar)

    @property
    def series_argument(self):
        """mu kappa / (mu kappa + m), the argument of the moment and loss series"""
        return self.mu * self.kappa / (self.mu * self.kappa + self.m)

    def with_gamma_bar(self, gamma_bar):
        return dataclasses.replace(self, gamma_bar=gamma_bar)


@dataclass(frozen=True)
class LimitPolicy:
    """Surrogates standing in for m -> inf and kappa -> 0"""
    m_infinity: float = 1e6
    kappa_zero: float = 1e-9

    def __post_init__(self):
        _require(self.m_infinity >= 1e3,
                 'm_infinity must be at least 1e3, got {}'.format(self.m_infinity))
        _require(0 < self.kappa_zero <= 1e-6,
                 'kappa_zero must lie in (0, 1e-6], got {}'.format(self.kappa_zero))


class FadingModel(object):
    """Base of the fading model variants

    ``tag`` is the command line name of the variant, ``label`` its display
    name. Every variant carries its native parameters plus ``gamma_bar``.
    """
    tag: ClassVar[str] = None
    label: ClassVar[str] = None

    def __post_init__(self):
        _positive('gamma_bar', self.gamma_bar)
        self.validate()

    def validate(self):
        pass

    def native(self):
        return dataclasses.asdict(self)

    def with_gamma_bar(self, gamma_bar):
        return dataclasses.replace(self, gamma_bar=gamma_bar)


@dataclass(frozen=True)
class Awgn(FadingModel):
    tag = 'awgn'
    label = 'AWGN'
    gamma_bar: float = 1.0


@dataclass(frozen=True)
class OneSidedGaussian(FadingModel):
    tag = 'osg'
    label = 'one-sided Gaussian'
    gamma_bar: float = 1.0


@dataclass(frozen=True)
class Rayleigh(FadingModel):
    tag = 'rayleigh'
    label = 'Rayleigh'
    gamma_bar: float = 1.0


@dataclass(frozen=True)
class NakagamiM(FadingModel):
    tag = 'nakagami'
    label = 'Nakagami-m'
    m: float = 1.0
    gamma_bar: float = 1.0

    def validate(self):
        _positive('m', self.m)


@dataclass(frozen=True)
class NakagamiQ(FadingModel):
    tag = 'hoyt'
    label = 'Nakagami-q (Hoyt)'
    q: float = 1.0
    gamma_bar: float = 1.0

    def validate(self):
        _require(0 < self.q <= 1, 'Hoyt q must lie in (0, 1], got {}'.format(self.q))


@dataclass(frozen=True)
class Rician(FadingModel):
    tag = 'rician'
    label = 'Rician'
    K: float = 0.0
    gamma_bar: float = 1.0

    def validate(self):
        _nonnegative('K', self.K)


@dataclass(frozen=True)
class KappaMu(FadingModel):
    tag = 'kmu'
    label = 'kappa-mu'
    kappa: float = 0.0
    mu: float = 1.0
    gamma_bar: float = 1.0

    def validate(self):
        _nonnegative('kappa', self.kappa)
        _positive('mu', self.mu)


@dataclass(frozen=True)
class EtaMu(FadingModel):
    """Format 1: eta is the in-phase to quadrature scattered power ratio"""
    tag = 'emu'
    label = 'eta-mu'
    eta: float = 1.0
    mu: float = 0.5
    gamma_bar: float = 1.0

    def validate(self):
        _positive('eta', self.eta)
        _positive('mu', self.mu)


@dataclass(frozen=True)
class RicianShadowed(FadingModel):
    tag = 'rs'
    label = 'Rician shadowed'
    K: float = 0.0
    m: float = 1.0
    gamma_bar: float = 1.0

    def validate(self):
        _nonnegative('K', self.K)
        _positive('m', self.m)


@dataclass(frozen=True)
class KappaMuShadowed(FadingModel):
    tag = 'kms'
    label = 'kappa-mu shadowed'
    kappa: float = 0.0
    mu: float = 1.0
    m: float = 1.0
    gamma_bar: float = 1.0

    def validate(self):
        _nonnegative('kappa', self.kappa)
        _positive('mu', self.mu)
        _positive('m', self.m)


MODELS = {cls.tag: cls for cls in (Awgn, OneSidedGaussian, Rayleigh, NakagamiM, NakagamiQ,
                                   Rician, KappaMu, EtaMu, RicianShadowed, KappaMuShadowed)}
