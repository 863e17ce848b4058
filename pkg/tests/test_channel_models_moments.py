import math

import pytest

from specfun.errors import DomainError
from channel_models.params import ShadowedParams
from channel_models.density import pdf_kappa_mu_shadowed, tail_bound
from channel_models.moments import normalized_moment, moment, moment_direct, amount_of_fading
from utils.quadrature import integrate_pieces


def test_first_moment_is_mean(kms_params):
    assert moment(kms_params.with_gamma_bar(7.5), 1) == 7.5
    assert normalized_moment(kms_params, 1) == pytest.approx(1.0, rel=1e-13)


def test_second_moment_nakagami_row():
    p = ShadowedParams(3.0, 2.0, 2.0, gamma_bar=1.5)
    assert moment(p, 2) == pytest.approx(2.25 * 1.5, rel=1e-13)
    assert moment_direct(p, 2) == pytest.approx(2.25 * 1.5, rel=1e-10)


@pytest.mark.parametrize('n', [2, 3, 2.5])
def test_transformed_and_direct_series_agree(kms_params, n):
    assert moment(kms_params, n) == pytest.approx(moment_direct(kms_params, n), rel=1e-10)


@pytest.mark.parametrize('n', [2, 3])
def test_moment_against_quadrature(kms_params, n):
    upper = tail_bound(kms_params, 1e-16)
    value, _ = integrate_pieces(lambda g: g ** n * pdf_kappa_mu_shadowed(kms_params, g),
                                0.0, upper, 1e-10, (0.1, 1.0, 10.0))
    assert moment(kms_params, n) == pytest.approx(value, rel=1e-8)


def test_zero_order_and_negative_orders(kms_params):
    assert normalized_moment(kms_params, 0) == 1.0
    assert normalized_moment(kms_params, -0.5) > 1.0
    with pytest.raises(DomainError):
        normalized_moment(kms_params, -kms_params.mu)
    with pytest.raises(DomainError):
        moment(kms_params, 0)


def test_amount_of_fading_gamma_law():
    # kappa = 0 leaves Gamma(mu, mu) whatever m is
    p = ShadowedParams(0.0, 1.5, 2.3)
    assert amount_of_fading(p, 2) == pytest.approx(1.0 / 1.5, rel=1e-13)
    assert amount_of_fading(p, 1) == 0.0
