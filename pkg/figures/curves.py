"""Data behind the capacity figures, one table per legend entry"""
import json
import logging
import math
import os
from dataclasses import dataclass, field

import numpy as np
from tqdm import tqdm

from specfun.errors import NonConvergence, QuadratureFailure
from channel_models.params import Awgn
from channel_models.reduction import reduce_to_shadowed
from capacity.loss import loss_kappa_mu_shadowed, loss_kappa_mu, loss_eta_mu, loss_table2
from capacity.ergodic import (asymptotic_capacity, ergodic_capacity_quadrature,
                              ergodic_capacity_mc)
from physical_sampler.sampler import sample_conditional
from physical_sampler.streams import derive_seed
from config.figures import CAPACITY, LOSS_KMS, LOSS_KMU, LOSS_EMU
from utils.util import db_to_linear
from .writer import write_table

LOG = logging.getLogger(__name__)

NUMERIC_FAILURES = (NonConvergence, QuadratureFailure)


@dataclass
class FigureResult:
    paths: list = field(default_factory=list)
    failures: list = field(default_factory=list)


def _guarded(func, failures, point):
    try:
        return func()
    except NUMERIC_FAILURES as exc:
        LOG.warning({'type': 'numeric-failure', 'point': point, 'error': str(exc)})
        failures.append(dict(point, error=str(exc)))
        return math.nan


def capacity_table(spec, index, curve, failures, mc_samples=None, seed=0,
                   policy=None, ctrl=None, progress=False):
    """gbar_db, gbar_linear, asymptotic, quadrature (and the Monte Carlo estimate)"""
    gbar_db = np.asarray(spec.grid, dtype=float)
    gbar = db_to_linear(gbar_db)
    columns = {'gbar_db': gbar_db, 'gbar_linear': gbar,
               'asymptotic': np.empty_like(gbar), 'quadrature': np.empty_like(gbar)}
    if mc_samples:
        columns['mc_mean'] = np.empty_like(gbar)
        columns['mc_std_error'] = np.empty_like(gbar)
    points = tqdm(enumerate(gbar), total=gbar.size, disable=not progress,
                  desc='fig{} {}'.format(spec.figure_id, curve.label))
    for k, g in points:
        point = {'figure': spec.figure_id, 'curve': curve.label, 'gbar_db': float(gbar_db[k])}
        model = curve.model.with_gamma_bar(g)
        columns['quadrature'][k] = _guarded(
            lambda: ergodic_capacity_quadrature(model, g, policy=policy, ctrl=ctrl), failures, point)
        columns['asymptotic'][k] = _guarded(
            lambda: asymptotic_capacity(model, g, ctrl), failures, point)
        if mc_samples:
            if isinstance(model, Awgn):
                columns['mc_mean'][k], columns['mc_std_error'][k] = math.log2(1.0 + g), 0.0
                continue
            batch = sample_conditional(reduce_to_shadowed(model, policy), mc_samples,
                                       derive_seed(seed, spec.figure_id, index, k))
            estimate = ergodic_capacity_mc(batch)
            columns['mc_mean'][k], columns['mc_std_error'][k] = estimate.mean, estimate.std_error
    return columns


def loss_table(spec, curve, failures, ctrl=None):
    """The sweep parameter and the capacity loss along it

    A curve carrying a fixed model is a reference line at that model's loss.
    """
    grid = np.asarray(spec.grid, dtype=float)
    values = np.empty_like(grid)
    for k, x in enumerate(grid):
        point = {'figure': spec.figure_id, 'curve': curve.label, spec.axis: float(x)}
        if curve.model is not None:
            func = lambda: loss_table2(curve.model, ctrl).loss_bits
        elif spec.kind == LOSS_KMS:
            func = lambda: loss_kappa_mu_shadowed(x, curve.mu, curve.m, ctrl).loss_bits
        elif spec.kind == LOSS_KMU:
            func = lambda: loss_kappa_mu(x, curve.mu, ctrl).loss_bits
        elif spec.kind == LOSS_EMU:
            func = lambda: loss_eta_mu(x, curve.mu, ctrl).loss_bits
        else:
            raise ValueError('unknown curve kind {!r}'.format(spec.kind))
        values[k] = _guarded(func, failures, point)
    return {spec.axis: grid, 'loss': values}


def curve_tables(spec, mc_samples=None, seed=0, policy=None, ctrl=None, progress=False):
    """(curve, columns) for every legend entry of ``spec``, plus numeric failures"""
    failures, tables = [], []
    for index, curve in enumerate(spec.curves):
        if spec.kind == CAPACITY:
            columns = capacity_table(spec, index, curve, failures, mc_samples, seed,
                                     policy, ctrl, progress)
        else:
            columns = loss_table(spec, curve, failures, ctrl)
        tables.append((curve, columns))
    return tables, failures


def write_figure(spec, out_dir, mc_samples=None, seed=0, policy=None, ctrl=None, progress=False):
    """Write fig<k>_<label>.csv per curve and fig<k>_meta.json

    Returns:
        FigureResult with the written paths and the failed points; failed
        points appear as nan in the tables and are listed in the metadata.
    """
    os.makedirs(out_dir, exist_ok=True)
    tables, failures = curve_tables(spec, mc_samples, seed, policy, ctrl, progress)
    result = FigureResult(failures=failures)
    for curve, columns in tables:
        path = os.path.join(out_dir, spec.file_name(curve))
        write_table(columns, path, 'csv')
        result.paths.append(path)
    meta = {
        'figure': spec.figure_id,
        'title': spec.title,
        'axis': spec.axis,
        'curves': [{'label': c.label, 'file': spec.file_name(c),
                    'model': None if c.model is None else dict(type=type(c.model).__name__,
                                                               **c.model.native()),
                    'mu': c.mu, 'm': c.m} for c in spec.curves],
        'seed': seed if mc_samples else None,
        'mc_samples': mc_samples,
        'notes': list(spec.notes),
        'partial': bool(failures),
        'failures': failures,
    }
    meta_path = os.path.join(out_dir, 'fig{}_meta.json'.format(spec.figure_id))
    with open(meta_path, 'w', newline='\n') as f:
        json.dump(meta, f, indent=2, sort_keys=True)
        f.write('\n')
    result.paths.append(meta_path)
    LOG.info({'type': 'figure', 'figure': spec.figure_id, 'files': result.paths,
              'failures': len(failures)})
    return result
