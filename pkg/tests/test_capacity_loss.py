import math

import numpy as np
import pytest

from specfun.errors import DomainError
from channel_models.params import (ShadowedParams, Awgn, OneSidedGaussian, Rayleigh, NakagamiM,
                                   NakagamiQ, Rician, KappaMu, EtaMu, RicianShadowed,
                                   KappaMuShadowed)
from capacity.loss import (loss_kappa_mu_shadowed, loss_kappa_mu, loss_eta_mu, loss_table2,
                           LOG2E, RAYLEIGH_LOSS, KAPPA_MU_SERIES_MAX)
from capacity.oracle import loss_oracle, af_derivative_oracle


def test_classic_anchors():
    assert RAYLEIGH_LOSS == pytest.approx(0.832746, abs=1e-6)
    assert loss_table2(Rayleigh()).loss_bits == pytest.approx(0.8327, abs=5e-4)
    assert loss_table2(OneSidedGaussian()).loss_bits == pytest.approx(1.8327, abs=5e-4)
    assert loss_table2(NakagamiM(m=2.0)).loss_bits == pytest.approx(0.390055, abs=1e-6)
    assert loss_table2(Awgn()).loss_bits == 0.0


def test_shadowed_with_equal_m_and_mu_is_nakagami():
    nakagami = loss_table2(NakagamiM(m=2.0)).loss_bits
    for kappa in (0.0, 1.0, 5.0, 20.0):
        assert loss_kappa_mu_shadowed(kappa, 2.0, 2.0).loss_bits == pytest.approx(nakagami,
                                                                                   abs=1e-12)


def test_shadowed_zero_kappa_is_nakagami():
    assert loss_kappa_mu_shadowed(0.0, 1.5, 0.7).loss_bits == pytest.approx(
        loss_table2(NakagamiM(m=1.5)).loss_bits, abs=1e-12)


def test_shadowed_loss_matches_oracle(kms_params):
    analytic = loss_kappa_mu_shadowed(1.5, 1.2, 2.3).loss_bits
    assert loss_oracle(kms_params) == pytest.approx(analytic, abs=1e-6)
    assert af_derivative_oracle(kms_params) == pytest.approx(-analytic / LOG2E, abs=1e-6)


@pytest.mark.parametrize('kappa, mu, m', [(0.3, 0.7, 4.0), (8.0, 3.0, 0.6), (2.0, 10.0, 20.0)])
def test_shadowed_loss_matches_oracle_elsewhere(kappa, mu, m):
    assert loss_oracle(ShadowedParams(kappa, mu, m)) == pytest.approx(
        loss_kappa_mu_shadowed(kappa, mu, m).loss_bits, abs=1e-5)


def test_kappa_mu_zero_kappa():
    assert loss_kappa_mu(0.0, 2.4).loss_bits == pytest.approx(
        loss_table2(NakagamiM(m=2.4)).loss_bits, abs=1e-13)


@pytest.mark.parametrize('kappa, mu', [(4.0, 2.0), (15.0, 2.0), (20.0, 0.7)])
def test_kappa_mu_is_large_m_limit(kappa, mu):
    # (4, 2) sums the series, the others take the integral path
    limit = loss_kappa_mu_shadowed(kappa, mu, 1e8).loss_bits
    assert loss_kappa_mu(kappa, mu).loss_bits == pytest.approx(limit, abs=1e-5)


def test_kappa_mu_paths_meet():
    mu = 2.0
    below = loss_kappa_mu(KAPPA_MU_SERIES_MAX / mu * (1.0 - 1e-9), mu).loss_bits
    above = loss_kappa_mu(KAPPA_MU_SERIES_MAX / mu * (1.0 + 1e-9), mu).loss_bits
    assert above == pytest.approx(below, abs=1e-8)


def test_eta_mu_symmetry():
    for eta in (1e-3, 0.1, 0.25):
        assert loss_eta_mu(eta, 1.2).loss_bits == loss_eta_mu(1.0 / eta, 1.2).loss_bits
    direct = loss_eta_mu(1.5, 1.2, use_symmetry=False).loss_bits
    assert direct == pytest.approx(loss_eta_mu(1.0 / 1.5, 1.2).loss_bits, abs=1e-10)
    with pytest.raises(DomainError):
        loss_eta_mu(3.0, 1.2, use_symmetry=False)


def test_eta_mu_reduction_is_exact():
    assert loss_eta_mu(0.5, 1.2).loss_bits == pytest.approx(
        loss_kappa_mu_shadowed(0.5, 2.4, 1.2).loss_bits, abs=1e-9)
    # eta = 1 leaves Nakagami-m with m = 2 mu
    assert loss_eta_mu(1.0, 0.8).loss_bits == pytest.approx(
        loss_table2(NakagamiM(m=1.6)).loss_bits, abs=1e-13)


def test_hoyt_row():
    assert loss_table2(NakagamiQ(q=1.0)).loss_bits == pytest.approx(RAYLEIGH_LOSS, abs=1e-14)
    assert loss_table2(NakagamiQ(q=0.2)).loss_bits == pytest.approx(
        loss_kappa_mu_shadowed(12.0, 1.0, 0.5).loss_bits, abs=1e-9)
    assert loss_table2(NakagamiQ(q=0.5)).loss_bits == pytest.approx(
        loss_eta_mu(0.25, 0.5).loss_bits, abs=1e-9)


def test_rician_rows():
    assert loss_table2(Rician(K=0.0)).loss_bits == RAYLEIGH_LOSS
    assert loss_table2(Rician(K=10.0)).loss_bits == pytest.approx(
        loss_kappa_mu(10.0, 1.0).loss_bits, abs=1e-9)
    assert loss_table2(RicianShadowed(K=10.0, m=1.0)).loss_bits == pytest.approx(
        RAYLEIGH_LOSS, abs=1e-14)
    assert loss_table2(RicianShadowed(K=10.0, m=2.3)).loss_bits == pytest.approx(
        loss_kappa_mu_shadowed(10.0, 1.0, 2.3).loss_bits, abs=1e-12)


def test_table_dispatch_of_generalized_models():
    assert loss_table2(KappaMu(2.7, 2.4)).loss_bits == loss_kappa_mu(2.7, 2.4).loss_bits
    assert loss_table2(EtaMu(0.5, 1.2)).loss_bits == loss_eta_mu(0.5, 1.2).loss_bits
    result = loss_table2(KappaMuShadowed(1.5, 1.2, 2.3))
    assert result.loss_bits == loss_kappa_mu_shadowed(1.5, 1.2, 2.3).loss_bits
    assert result.model == KappaMuShadowed(1.5, 1.2, 2.3)


def test_trends_in_kappa():
    kappas = np.linspace(0.0, 20.0, 11)
    shadowed = [loss_kappa_mu_shadowed(k, 1.0, 0.5).loss_bits for k in kappas]
    light = [loss_kappa_mu_shadowed(k, 3.0, 20.0).loss_bits for k in kappas]
    assert np.all(np.diff(shadowed) > 0)
    assert np.all(np.diff(light) < 0)


def test_loss_decreases_with_mu():
    values = [loss_kappa_mu_shadowed(2.0, mu, 3.0).loss_bits for mu in (0.5, 0.7, 1.0, 1.5, 3.0, 20.0)]
    assert np.all(np.diff(values) < 0)
