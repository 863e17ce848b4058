"""Monte Carlo draws of the instantaneous SNR

Draws are produced in fixed-size blocks, block k from stream k of the seed.
With ``workers > 1`` the blocks are spread over a multiprocessing pool;
the concatenated batch does not depend on the number of workers.
"""
import logging
import multiprocessing

import numpy as np

from specfun.errors import DomainError
from .batch import SampleBatch
from .generative import CommonShadow, IidShadow, ConditionalGamma, DRAWS
from .streams import stream_generator, check_seed

LOG = logging.getLogger(__name__)

BLOCK_SIZE = 1 << 16


def _block_sizes(count):
    full, rest = divmod(count, BLOCK_SIZE)
    return [BLOCK_SIZE] * full + ([rest] if rest else [])


def _draw_block(model, gamma_bar, size, seed, stream):
    return DRAWS[type(model)](model, gamma_bar, size, stream_generator(seed, stream))


def _model_tag(model):
    p = model.shadowed_params()
    return '{}(kappa={:.6g}, mu={:.6g}, m={:.6g})'.format(model.tag, p.kappa, p.mu, p.m)


def sample(model, gamma_bar, count, seed, workers=1):
    """Draw ``count`` SNR values of mean ``gamma_bar`` from a generative model

    Args:
        model: CommonShadow, IidShadow or ConditionalGamma
        gamma_bar: target mean SNR (linear)
        count: number of draws, at least 1
        seed: 64-bit seed; the batch is a pure function of (model, gamma_bar, count, seed)
        workers: processes drawing blocks in parallel

    Returns:
        SampleBatch
    """
    if type(model) not in DRAWS:
        raise DomainError('unknown generative model {!r}'.format(model))
    if int(count) != count or count < 1:
        raise DomainError('count must be a positive integer, got {}'.format(count))
    if not gamma_bar > 0:
        raise DomainError('gamma_bar must be positive, got {}'.format(gamma_bar))
    seed = check_seed(seed)
    tasks = [(model, gamma_bar, size, seed, stream)
             for stream, size in enumerate(_block_sizes(int(count)))]
    if workers > 1 and len(tasks) > 1:
        LOG.debug('drawing %d blocks with %d workers', len(tasks), workers)
        with multiprocessing.Pool(min(workers, len(tasks))) as pool:
            blocks = pool.starmap(_draw_block, tasks)
    else:
        blocks = [_draw_block(*task) for task in tasks]
    LOG.info({'type': 'sample', 'model': _model_tag(model), 'count': int(count), 'seed': seed})
    return SampleBatch(np.concatenate(blocks), seed, _model_tag(model), gamma_bar)


def sample_common_shadow(model, gamma_bar, count, seed, workers=1):
    if not isinstance(model, CommonShadow):
        raise DomainError('expected a CommonShadow model, got {!r}'.format(model))
    return sample(model, gamma_bar, count, seed, workers)


def sample_iid_shadow(model, gamma_bar, count, seed, workers=1):
    if not isinstance(model, IidShadow):
        raise DomainError('expected an IidShadow model, got {!r}'.format(model))
    return sample(model, gamma_bar, count, seed, workers)


def sample_conditional(p, count, seed, fixed_shadow=None, workers=1):
    """Poisson-Gamma mixture draws following the kappa-mu shadowed density of ``p``"""
    return sample(ConditionalGamma(p, fixed_shadow), p.gamma_bar, count, seed, workers)
