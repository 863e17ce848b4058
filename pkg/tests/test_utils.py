import math

import numpy as np
import pytest

from specfun.errors import QuadratureFailure
from utils.util import boolean_string, db_to_linear, linear_to_db, parse_grid, AverageMeter
from utils.quadrature import integrate_pieces, integrate_unit_weighted


def test_boolean_string():
    assert boolean_string('True') is True
    assert boolean_string('False') is False
    with pytest.raises(ValueError):
        boolean_string('yes')


def test_decibels():
    assert db_to_linear(30.0) == pytest.approx(1000.0)
    assert linear_to_db(0.5) == pytest.approx(-3.0103, abs=1e-4)


def test_parse_grid_range_includes_stop():
    grid = parse_grid('0:5:0.1')
    assert grid.size == 51
    assert grid[0] == 0.0
    assert grid[-1] == pytest.approx(5.0)


def test_parse_grid_list():
    np.testing.assert_array_equal(parse_grid('1,2.5,4'), [1.0, 2.5, 4.0])
    with pytest.raises(ValueError):
        parse_grid('3,2')
    with pytest.raises(ValueError):
        parse_grid('0:5:-1')


def test_average_meter_chunks():
    values = np.random.default_rng(0).normal(2.0, 3.0, 1000)
    whole, chunks = AverageMeter(), AverageMeter()
    whole.update(values)
    for part in np.array_split(values, 7):
        chunks.update(part)
    assert chunks.count == whole.count == 1000
    assert chunks.avg == pytest.approx(values.mean(), rel=1e-13)
    assert chunks.variance == pytest.approx(values.var(ddof=1), rel=1e-12)
    assert whole.std_error == pytest.approx(values.std(ddof=1) / math.sqrt(1000), rel=1e-12)


def test_integrate_pieces():
    value, abserr = integrate_pieces(lambda x: math.exp(-x), 0.0, 50.0, 1e-12, (1.0, 10.0))
    assert value == pytest.approx(1.0 - math.exp(-50.0), abs=1e-12)
    assert abserr <= 1e-12
    assert integrate_pieces(math.exp, 1.0, 1.0) == (0.0, 0.0)


def test_integrate_pieces_raises_on_divergence():
    with pytest.raises(QuadratureFailure):
        integrate_pieces(lambda x: 1.0 / x, 0.0, 1.0)


def test_integrate_unit_weighted():
    # int_0^1 s^0.5 (1-s)^-0.5 ds = B(1.5, 0.5) = pi / 2
    value, _ = integrate_unit_weighted(lambda s: 1.0, 0.5, -0.5)
    assert value == pytest.approx(math.pi / 2.0, rel=1e-10)
