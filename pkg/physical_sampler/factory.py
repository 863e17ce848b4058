import logging

from .generative import CommonShadow, IidShadow, ConditionalGamma
from .gof import N_BINS

LOG = logging.getLogger(__name__)

ENGINES = {
    'conditional': lambda p, sigma2: ConditionalGamma(p),
    'physical': CommonShadow.from_params,
    'iid': IidShadow.from_params,
}


def sampler_cli(parser):
    group = parser.add_argument_group('sampler')
    group.add_argument('--engine', default='conditional', choices=sorted(ENGINES),
                       help='conditional: Poisson-Gamma mixture for any mu; physical: '
                            'clusters with one common shadowing term; iid: clusters '
                            'shadowed independently (integer mu only for both)')
    group.add_argument('--sigma2', default=0.5, type=float,
                       help='per-component scatter variance of the physical engines')
    group.add_argument('--workers', default=1, type=int,
                       help='processes drawing sample blocks in parallel')
    group.add_argument('--gof', default=False, action='store_true',
                       help='report a chi-square goodness of fit against the density')
    group.add_argument('--bins', default=N_BINS, type=int,
                       help='equal-probability bins of the goodness of fit')


def sampler_factory(args, p):
    """Generative model of the selected engine matching the parameters ``p``.

    Raises:
        DomainError: a physical engine was asked for a non-integer mu
    """
    model = ENGINES[args.engine](p, args.sigma2)
    LOG.debug('generative model: %s', model)
    return model
