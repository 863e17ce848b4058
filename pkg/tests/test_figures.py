import json
import math

import numpy as np
import pytest

from channel_models.params import Rayleigh
from capacity.loss import RAYLEIGH_LOSS, loss_eta_mu, loss_kappa_mu_shadowed
from config.figures import FIGURES, FigureSpec, CurveSpec, CAPACITY, MU_SWEEP, slug
from figures.writer import render_table, write_table
from figures.curves import write_figure, curve_tables, loss_table, capacity_table


def test_csv_table_layout():
    text = render_table({'x': [0.0, 1.5], 'y': [2.0, -3.25e-7]})
    assert text == ('x,y\n'
                    '0.000000000000e+00,2.000000000000e+00\n'
                    '1.500000000000e+00,-3.250000000000e-07\n')


def test_json_table_marks_failures():
    table = json.loads(render_table({'x': [1.0, 2.0], 'y': [0.5, math.nan]}, 'json', {'seed': 3}))
    assert table['columns'] == ['x', 'y']
    assert table['rows'] == [[1.0, 0.5], [2.0, None]]
    assert table['meta'] == {'seed': 3}


def test_table_errors():
    with pytest.raises(ValueError):
        render_table({'x': [1.0], 'y': [1.0, 2.0]})
    with pytest.raises(ValueError):
        render_table({'x': [1.0]}, 'xml')


def test_write_table_to_stdout(capsys):
    assert write_table({'loss': [0.5]}) is None
    assert capsys.readouterr().out == 'loss\n5.000000000000e-01\n'


def test_figure_parameter_sets():
    assert sorted(FIGURES) == list(range(1, 9))
    labels = [c.label for c in FIGURES[2].curves]
    assert labels == ['awgn', 'kmu_kappa2p7_mu2p4', 'emu_eta0p5_mu1p2', 'kms_kappa1p5_mu1p2_m2p3']
    assert [c.label for c in FIGURES[1].curves][:3] == ['awgn', 'rician_K10', 'nakagami_m1p5']
    assert FIGURES[1].notes
    assert len(FIGURES[1].grid) == 31 and FIGURES[1].grid[-1] == 30.0
    assert [c.m for c in FIGURES[5].curves] == [3.0] * len(MU_SWEEP)
    assert FIGURES[3].file_name(FIGURES[3].curves[0]) == 'fig3_mu0p5.csv'
    assert slug(1.5) == '1p5' and slug(20.0) == '20'


def test_figure_spec_validation():
    with pytest.raises(ValueError):
        FigureSpec(1, 'empty', CAPACITY, 'gbar_db', (), ())
    with pytest.raises(ValueError):
        FigureSpec(9, 'bad id', CAPACITY, 'gbar_db', (0.0, 1.0), ())
    with pytest.raises(ValueError):
        FigureSpec(1, 'decreasing', CAPACITY, 'gbar_db', (1.0, 0.0), ())


def test_eta_figure_is_symmetric():
    tables, failures = curve_tables(FIGURES[8])
    assert not failures
    for _, columns in tables:
        np.testing.assert_allclose(columns['loss'], columns['loss'][::-1], rtol=1e-9)
        np.testing.assert_allclose(columns['eta'] * columns['eta'][::-1], 1.0, rtol=1e-12)


def test_eta_figure_reference_lines():
    spec = FIGURES[8]
    assert [c.label for c in spec.curves][-2:] == ['rayleigh', 'osg']
    tables, _ = curve_tables(spec)
    rayleigh, osg = tables[-2][1]['loss'], tables[-1][1]['loss']
    np.testing.assert_allclose(rayleigh, RAYLEIGH_LOSS, rtol=1e-12)
    np.testing.assert_allclose(osg, 1.0 + RAYLEIGH_LOSS, rtol=1e-12)
    # eta = 1 on the mu = 1/2 curve is Rayleigh
    middle = len(spec.grid) // 2
    assert spec.grid[middle] == pytest.approx(1.0)
    half = dict((c.label, columns) for c, columns in tables)['mu0p5']
    assert half['loss'][middle] == pytest.approx(rayleigh[middle], rel=1e-9)


def test_shadowed_figure_ordering_at_zero_kappa():
    tables, _ = curve_tables(FIGURES[3])
    at_zero = [columns['loss'][0] for _, columns in tables]
    assert np.all(np.diff(at_zero) < 0)
    curve, columns = tables[2]
    assert columns['loss'][10] == loss_kappa_mu_shadowed(columns['kappa'][10], curve.mu, 0.5).loss_bits


def test_loss_table_matches_library():
    spec = FIGURES[8]
    columns = loss_table(spec, spec.curves[1], [])
    assert columns['loss'][5] == loss_eta_mu(spec.grid[5], spec.curves[1].mu).loss_bits


def test_capacity_table_with_monte_carlo():
    spec = FigureSpec(1, 'two points', CAPACITY, 'gbar_db', (0.0, 30.0),
                      (CurveSpec('rayleigh', Rayleigh()),))
    failures = []
    columns = capacity_table(spec, 0, spec.curves[0], failures, mc_samples=100000, seed=1)
    assert list(columns) == ['gbar_db', 'gbar_linear', 'asymptotic', 'quadrature', 'mc_mean',
                             'mc_std_error']
    assert not failures
    assert abs(columns['mc_mean'][1] - columns['asymptotic'][1]) < 0.05
    assert np.all(np.abs(columns['mc_mean'] - columns['quadrature'])
                  < 4.0 * columns['mc_std_error'])


def test_write_figure_files(tmp_path):
    result = write_figure(FIGURES[7], str(tmp_path))
    names = sorted(p.name for p in tmp_path.iterdir())
    assert names == sorted(['fig7_meta.json'] + ['fig7_mu' + slug(mu) + '.csv' for mu in MU_SWEEP])
    assert len(result.paths) == len(MU_SWEEP) + 1
    lines = (tmp_path / 'fig7_mu1.csv').read_text().splitlines()
    assert lines[0] == 'kappa,loss'
    assert len(lines) == 1 + len(FIGURES[7].grid)
    meta = json.loads((tmp_path / 'fig7_meta.json').read_text())
    assert meta['partial'] is False
    assert meta['mc_samples'] is None


def test_figure_files_are_deterministic(tmp_path):
    write_figure(FIGURES[4], str(tmp_path / 'first'))
    write_figure(FIGURES[4], str(tmp_path / 'second'))
    for path in (tmp_path / 'first').iterdir():
        assert path.read_bytes() == (tmp_path / 'second' / path.name).read_bytes()
