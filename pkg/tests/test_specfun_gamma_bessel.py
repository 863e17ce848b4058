import math

import numpy as np
import pytest
from scipy import special

from specfun.errors import DomainError
from specfun.gamma import ln_gamma, digamma, upper_incomplete_gamma
from specfun.bessel import log_bessel_i, bessel_i, SERIES_MAX_Z


def test_ln_gamma():
    assert ln_gamma(5.0) == pytest.approx(math.log(24.0), rel=1e-15)
    assert ln_gamma(0.5) == pytest.approx(0.5 * math.log(math.pi), rel=1e-15)
    with pytest.raises(DomainError):
        ln_gamma(0.0)


def test_digamma():
    assert digamma(1.0) == pytest.approx(-np.euler_gamma, rel=1e-15)
    assert digamma(0.5) == pytest.approx(-np.euler_gamma - 2.0 * math.log(2.0), rel=1e-14)
    # recurrence psi(x+1) = psi(x) + 1/x
    assert digamma(3.7) == pytest.approx(digamma(2.7) + 1.0 / 2.7, rel=1e-14)
    with pytest.raises(DomainError):
        digamma(-1.0)


def test_upper_incomplete_gamma_positive_order():
    assert upper_incomplete_gamma(1.0, 2.0) == pytest.approx(math.exp(-2.0), rel=1e-14)
    assert upper_incomplete_gamma(0.5, 0.0) == pytest.approx(math.sqrt(math.pi), rel=1e-14)


def test_upper_incomplete_gamma_zero_order_is_e1():
    assert upper_incomplete_gamma(0.0, 1.0) == pytest.approx(0.21938393439552029, rel=1e-14)


def test_upper_incomplete_gamma_negative_order():
    expected = math.exp(-1.0) - special.exp1(1.0)
    assert upper_incomplete_gamma(-1.0, 1.0) == pytest.approx(expected, rel=1e-13)


def test_upper_incomplete_gamma_edges():
    assert upper_incomplete_gamma(0.0, 0.0) == math.inf
    with pytest.raises(DomainError):
        upper_incomplete_gamma(1.0, -1.0)


def test_bessel_half_order_closed_form():
    assert bessel_i(0.5, 2.0) == pytest.approx(math.sinh(2.0) / math.sqrt(math.pi), rel=1e-13)


@pytest.mark.parametrize('nu, z', [(0.0, 0.3), (1.3, 10.0), (1.3, 49.0), (0.7, 80.0), (3.0, 200.0)])
def test_log_bessel_matches_scipy(nu, z):
    assert log_bessel_i(nu, z) == pytest.approx(math.log(special.iv(nu, z)), rel=1e-12)


def test_series_and_scaled_paths_agree_at_switch():
    below = log_bessel_i(2.2, SERIES_MAX_Z)
    above = log_bessel_i(2.2, SERIES_MAX_Z * (1.0 + 1e-12))
    assert above == pytest.approx(below, rel=1e-11)


def test_log_bessel_finite_beyond_overflow():
    assert log_bessel_i(0.0, 1000.0) == pytest.approx(
        1000.0 - 0.5 * math.log(2.0 * math.pi * 1000.0), rel=1e-6)


def test_log_bessel_origin_and_domain():
    assert log_bessel_i(0.0, 0.0) == 0.0
    assert log_bessel_i(1.0, 0.0) == -math.inf
    with pytest.raises(DomainError):
        log_bessel_i(-1.0, 1.0)
    with pytest.raises(DomainError):
        log_bessel_i(0.5, -1.0)
