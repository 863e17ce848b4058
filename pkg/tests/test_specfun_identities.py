import math

import numpy as np
import pytest

from specfun.series import PFQParams, pfq, hyp_pfq_partial_sums, log_hyp1f1
from specfun.gamma import ln_gamma, digamma
from specfun.bessel import log_bessel_i

POINTS = 100
LIMIT_STEPS = (1e2, 1e3, 1e4)


def test_1f1_with_equal_parameters_is_exponential(rng, ctrl):
    a = rng.uniform(0.1, 10.0, POINTS)
    z = rng.uniform(0.0, 20.0, POINTS)
    values = [pfq((ak,), (ak,), zk, ctrl) for ak, zk in zip(a, z)]
    np.testing.assert_allclose(values, np.exp(z), rtol=1e-9)


def test_kummer_bessel_identity(rng, ctrl):
    # 1F1(a; 2a; z) = 2^(2a-1) Gamma(a+1/2) z^(1/2-a) e^(z/2) I_(a-1/2)(z/2), compared in logs
    a = rng.uniform(0.2, 10.0, POINTS)
    z = rng.uniform(0.1, 30.0, POINTS)
    lhs = [log_hyp1f1(ak, 2.0 * ak, zk, ctrl) for ak, zk in zip(a, z)]
    rhs = [(2.0 * ak - 1.0) * math.log(2.0) + ln_gamma(ak + 0.5) + (0.5 - ak) * math.log(zk)
           + 0.5 * zk + log_bessel_i(ak - 0.5, 0.5 * zk, ctrl) for ak, zk in zip(a, z)]
    np.testing.assert_allclose(lhs, rhs, rtol=0, atol=1e-9)


def test_zero_argument_is_one(rng, ctrl):
    for _ in range(POINTS):
        p, q = rng.integers(0, 4), rng.integers(0, 4)
        numerators = tuple(rng.uniform(0.1, 10.0, p))
        denominators = tuple(rng.uniform(0.1, 10.0, q))
        assert pfq(numerators, denominators, 0.0, ctrl) == 1.0


def _strictly_decreasing(distances):
    return all(later < earlier for earlier, later in zip(distances, distances[1:]))


@pytest.mark.parametrize('b, z', [(1.5, 2.0), (0.7, 5.0), (3.0, 10.0)])
def test_1f1_confluent_limit_is_0f1(b, z, ctrl):
    target = pfq((), (b,), z, ctrl)
    distances = [abs(pfq((a,), (b,), z / a, ctrl) - target) for a in LIMIT_STEPS]
    assert _strictly_decreasing(distances)
    assert distances[-1] <= 1e-3 * target


@pytest.mark.parametrize('x', [0.5, 2.0, 5.0])
def test_1f0_limit_is_exponential(x, ctrl):
    values = [pfq((a,), (), -x / a, ctrl) for a in LIMIT_STEPS]
    np.testing.assert_allclose(values, [(1.0 + x / a) ** -a for a in LIMIT_STEPS], rtol=1e-9)
    distances = [abs(v - math.exp(-x)) for v in values]
    assert _strictly_decreasing(distances)
    assert distances[-1] <= x * x / LIMIT_STEPS[-1] * math.exp(-x)


@pytest.mark.parametrize('numerators, denominators, z', [
    ((1.0, 1.0), (2.0, 2.0), 1.0),
    ((0.5, 1.5), (2.5, 1.2), 3.0),
    ((1.0, 1.0), (2.0, 4.2), -2.0),
])
def test_3f2_collapses_to_2f2(numerators, denominators, z, ctrl):
    target = pfq(numerators, denominators, z, ctrl)
    distances = [abs(pfq(numerators + (c,), denominators, z / c, ctrl) - target)
                 for c in LIMIT_STEPS]
    assert _strictly_decreasing(distances)
    assert distances[-1] <= 1e-3 * abs(target)


@pytest.mark.parametrize('p, q', [(0, 1), (1, 1), (2, 1), (2, 2), (3, 2)])
def test_positive_series_have_monotone_partial_sums(p, q, rng, ctrl):
    for _ in range(POINTS // 5):
        numerators = tuple(rng.uniform(0.1, 5.0, p))
        denominators = tuple(rng.uniform(0.1, 5.0, q))
        x = rng.uniform(0.0, 0.9) if p == q + 1 else rng.uniform(0.0, 10.0)
        partials = hyp_pfq_partial_sums(PFQParams(numerators, denominators, x), ctrl)
        assert np.all(np.diff(partials) >= 0.0)


def test_digamma_recurrence(rng):
    x = np.concatenate((np.linspace(0.01, 50.0, 400), rng.uniform(0.0, 50.0, POINTS) + 1e-9))
    differences = [digamma(v + 1.0) - digamma(v) for v in x]
    np.testing.assert_allclose(differences, 1.0 / x, rtol=1e-12)
