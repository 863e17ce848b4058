import math

import numpy as np
import pytest
from scipy import special

from specfun.errors import DomainError, NonConvergence
from specfun.series import (SeriesControl, PFQParams, pochhammer, hyp_pfq, hyp_pfq_partial_sums,
                            pfq, log_hyp_pfq, log_hyp1f1)


def test_exponential_series():
    assert pfq((), (), 1.0) == pytest.approx(math.e, rel=1e-13)
    assert pfq((2.5,), (2.5,), 3.0) == pytest.approx(math.exp(3.0), rel=1e-12)


def test_2f1_logarithm():
    # 2F1(1, 1; 2; x) = -log(1-x) / x
    assert pfq((1.0, 1.0), (2.0,), 0.5) == pytest.approx(2.0 * math.log(2.0), rel=1e-12)


def test_terminating_2f1():
    assert pfq((0.5, -2.0), (3.0,), 0.4) == pytest.approx(1.0 - 2.0 / 15.0 + 0.01, rel=1e-14)


def test_terminating_series_ignores_radius():
    assert pfq((-3.0, 1.0), (2.0,), 5.0) == pytest.approx(-12.75, rel=1e-14)


def test_zero_argument():
    assert pfq((1.0, 2.0, 3.0), (4.0,), 0.0) == 1.0


@pytest.mark.parametrize('numerators, denominators, argument', [
    ((1.0, 1.0), (2.0,), 1.0),
    ((1.0, 1.0), (2.0,), -1.5),
    ((1.0, 1.0, 1.0), (2.0,), 0.1),
])
def test_divergent_series_rejected(numerators, denominators, argument):
    with pytest.raises(DomainError):
        pfq(numerators, denominators, argument)


def test_negative_integer_denominator_rejected():
    with pytest.raises(DomainError):
        PFQParams((1.0,), (-2.0,), 0.5)


def test_budget_exhausted():
    with pytest.raises(NonConvergence) as info:
        pfq((1.0, 1.0), (2.0,), 0.99, SeriesControl(max_terms=10))
    assert info.value.terms == 10
    assert info.value.params.argument == 0.99


def test_partial_sums_end_at_value():
    params = PFQParams((1.0, 1.0), (2.0,), 0.3)
    partials = hyp_pfq_partial_sums(params)
    assert partials[0] == 1.0
    assert partials[-1] == hyp_pfq(params)
    assert np.all(np.diff(partials) > 0)


def test_tighter_tolerance_needs_more_terms():
    params = PFQParams((1.0, 1.0), (2.0,), 0.9)
    loose = hyp_pfq_partial_sums(params, SeriesControl(rel_tol=1e-6))
    tight = hyp_pfq_partial_sums(params, SeriesControl(rel_tol=1e-14))
    assert tight.size > loose.size
    assert tight[-1] == pytest.approx(-math.log(0.1) / 0.9, rel=1e-12)


def test_control_validation():
    with pytest.raises(DomainError):
        SeriesControl(rel_tol=0.0)
    with pytest.raises(DomainError):
        SeriesControl(max_terms=0)


def test_pochhammer():
    assert pochhammer(0.5, 0) == 1.0
    assert pochhammer(0.5, 3) == pytest.approx(1.875, rel=1e-15)
    assert pochhammer(-2.0, 3) == 0.0
    assert pochhammer(1.0, 100) == pytest.approx(math.factorial(100), rel=1e-11)
    with pytest.raises(DomainError):
        pochhammer(1.0, -1)


def test_log_hyp1f1_matches_scipy():
    assert log_hyp1f1(2.3, 1.2, 5.0) == pytest.approx(math.log(special.hyp1f1(2.3, 1.2, 5.0)),
                                                      rel=1e-11)


def test_log_hyp1f1_equal_parameters():
    assert log_hyp1f1(1.5, 1.5, 10.0) == pytest.approx(10.0, rel=1e-13)


def test_log_hyp1f1_large_argument_agrees_with_series():
    z = 2000.0
    series = log_hyp_pfq(PFQParams((2.3,), (1.2,), z))
    assert log_hyp1f1(2.3, 1.2, z) == pytest.approx(series, rel=1e-11)


def test_log_hyp1f1_finite_where_1f1_overflows():
    value = log_hyp1f1(3.0, 1.0, 1000.0)
    assert math.isfinite(value)
    assert value > 1000.0


def test_log_space_needs_positive_bases():
    with pytest.raises(DomainError):
        log_hyp_pfq(PFQParams((-0.5,), (1.0,), 2.0))
