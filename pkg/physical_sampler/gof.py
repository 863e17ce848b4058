"""Goodness of fit of sample batches against analytic densities"""
import logging
from dataclasses import dataclass

import numpy as np
from scipy import stats

from channel_models.density import (cumulative_table, pdf_kappa_mu_shadowed, tail_bound)
from utils.quadrature import integrate_pieces

LOG = logging.getLogger(__name__)

ALPHA = 0.01
N_BINS = 30
GRID_POINTS = 600


@dataclass(frozen=True)
class GofResult:
    statistic: float
    p_value: float
    dof: int = None

    def passed(self, alpha=ALPHA):
        return self.p_value > alpha


class TabulatedCdf(object):
    """CDF of a density tabulated on [0, upper] and interpolated linearly

    Args:
        density: callable evaluating the density at one SNR value
        scale: typical SNR (the mean), used to place the grid
        upper: SNR beyond which the remaining mass is negligible
    """

    def __init__(self, density, scale, upper, points=GRID_POINTS, tol=1e-10):
        positive = np.geomspace(1e-6 * scale, max(upper, 2.0 * scale), points)
        self.density = density
        self.tol = tol
        self.grid = np.concatenate(([0.0], positive))
        self.values = cumulative_table(density, self.grid, tol)
        LOG.debug('tabulated cdf up to %g, mass %.12f', self.grid[-1], self.values[-1])

    def __call__(self, x):
        return np.clip(np.interp(x, self.grid, self.values), 0.0, 1.0)

    def exact(self, x):
        """CDF at one point: table value at the grid point below plus one quadrature"""
        k = int(np.searchsorted(self.grid, x, side='right')) - 1
        k = min(max(k, 0), self.grid.size - 1)
        extra = integrate_pieces(self.density, self.grid[k], x, self.tol)[0] if x > self.grid[k] else 0.0
        return float(self.values[k] + extra)

    def quantile(self, probability):
        return float(np.interp(probability, self.values, self.grid))

    @classmethod
    def shadowed(cls, p, ctrl=None):
        return cls(lambda g: pdf_kappa_mu_shadowed(p, g, ctrl), p.gamma_bar, tail_bound(p))


def chi_square_gof(values, cdf, n_bins=N_BINS):
    """Chi-square test on ``n_bins`` bins of equal model probability

    Bin edges are the model quantiles; the expected probability of every bin
    is recomputed at the chosen edges so interpolation error does not bias
    the statistic.
    """
    values = np.asarray(values, dtype=float)
    targets = np.arange(1, n_bins) / n_bins
    edges = np.array([cdf.quantile(t) for t in targets])
    at_edges = np.array([cdf.exact(e) for e in edges])
    probabilities = np.diff(np.concatenate(([0.0], at_edges, [1.0])))
    observed = np.bincount(np.searchsorted(edges, values, side='right'), minlength=n_bins)
    expected = probabilities / probabilities.sum() * values.size
    statistic, p_value = stats.chisquare(observed, expected)
    LOG.debug({'type': 'chi-square', 'statistic': float(statistic), 'p_value': float(p_value)})
    return GofResult(float(statistic), float(p_value), n_bins - 1)


def ks_one_sample(values, cdf):
    statistic, p_value = stats.kstest(np.asarray(values, dtype=float), cdf)
    return GofResult(float(statistic), float(p_value))


def ks_two_sample(first, second):
    statistic, p_value = stats.ks_2samp(np.asarray(first, dtype=float),
                                        np.asarray(second, dtype=float))
    return GofResult(float(statistic), float(p_value))
