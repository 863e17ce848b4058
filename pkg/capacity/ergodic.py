"""Ergodic capacity: high-SNR asymptote, quadrature and Monte Carlo estimates"""
import logging
import math
from dataclasses import dataclass

import numpy as np

from specfun.errors import DomainError
from channel_models.params import Awgn
from channel_models.density import pdf_native, tail_bound
from channel_models.reduction import reduce_to_shadowed
from physical_sampler.batch import SampleBatch
from utils.quadrature import integrate_pieces
from utils.util import AverageMeter
from .loss import loss_table2

LOG = logging.getLogger(__name__)


@dataclass(frozen=True)
class EstimateCI:
    mean: float
    std_error: float
    n_samples: int


def asymptotic_capacity(model, gamma_bar, ctrl=None):
    """log2(gamma_bar) - L(model) in bps/Hz"""
    if not gamma_bar > 0:
        raise DomainError('gamma_bar must be positive, got {}'.format(gamma_bar))
    return math.log2(gamma_bar) - loss_table2(model, ctrl).loss_bits


def ergodic_capacity_quadrature(model, gamma_bar, tol=1e-8, policy=None, ctrl=None):
    """Integral of log2(1+g) f(g) over [0, inf) for the native density of ``model``

    The upper limit is the tail bound of the reduced kappa-mu shadowed law
    with at most tol / 100 of the probability beyond it.

    Raises:
        QuadratureFailure
    """
    if not gamma_bar > 0:
        raise DomainError('gamma_bar must be positive, got {}'.format(gamma_bar))
    if isinstance(model, Awgn):
        return math.log2(1.0 + gamma_bar)
    model = model.with_gamma_bar(gamma_bar)
    upper = tail_bound(reduce_to_shadowed(model, policy), 1e-2 * tol)
    breakpoints = [b for b in gamma_bar * np.array([1e-3, 1e-1, 1.0, 10.0]) if b < upper]

    def integrand(g):
        return math.log2(1.0 + g) * pdf_native(model, g, ctrl)
    value, abserr = integrate_pieces(integrand, 0.0, upper, tol, breakpoints)
    LOG.debug('ergodic capacity of %s: %.12g (err %.2e)', model, value, abserr)
    return value


def ergodic_capacity_mc(batches):
    """Sample mean and standard error of log2(1+g)

    Args:
        batches: one SampleBatch or an iterable of them, pooled together
    """
    if isinstance(batches, SampleBatch):
        batches = [batches]
    meter = AverageMeter()
    for batch in batches:
        meter.update(np.log2(1.0 + batch.snr_values))
    if meter.count == 0:
        raise DomainError('Monte Carlo estimate needs a non-empty batch')
    return EstimateCI(meter.avg, meter.std_error, meter.count)
