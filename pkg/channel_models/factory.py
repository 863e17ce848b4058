import logging

from specfun.errors import DomainError
from utils.util import db_to_linear
from .params import LimitPolicy, MODELS
from .reduction import TABLE_ROWS

LOG = logging.getLogger(__name__)

# native parameters each --model needs, as (flag, dataclass field)
MODEL_FLAGS = {
    'awgn': (),
    'osg': (),
    'rayleigh': (),
    'nakagami': (('m', 'm'),),
    'hoyt': (('q', 'q'),),
    'rician': (('K', 'K'),),
    'kmu': (('kappa', 'kappa'), ('mu', 'mu')),
    'emu': (('eta', 'eta'), ('mu', 'mu')),
    'rs': (('K', 'K'), ('m', 'm')),
    'kms': (('kappa', 'kappa'), ('mu', 'mu'), ('m', 'm')),
}


def model_cli(parser):
    group = parser.add_argument_group('fading model')
    group.add_argument('--model', default='rayleigh', choices=sorted(MODEL_FLAGS),
                       help='fading model whose native parameters follow')
    group.add_argument('--kappa', default=None, type=float,
                       help='dominant-to-scattered power ratio (kmu, kms)')
    group.add_argument('--mu', default=None, type=float, help='cluster parameter (kmu, emu, kms)')
    group.add_argument('--m', default=None, type=float,
                       help='Nakagami-m fading or shadowing severity (nakagami, rs, kms)')
    group.add_argument('--eta', default=None, type=float, help='eta-mu power ratio (emu)')
    group.add_argument('--q', default=None, type=float, help='Hoyt parameter in (0, 1] (hoyt)')
    group.add_argument('--K', default=None, type=float, help='Rician factor (rician, rs)')
    snr = group.add_mutually_exclusive_group()
    snr.add_argument('--gbar-db', default=None, type=float, help='mean SNR in dB')
    snr.add_argument('--gbar', default=None, type=float,
                     help='mean SNR, linear (default 1 = 0 dB)')
    policy_cli(parser)


def policy_cli(parser):
    group = parser.add_argument_group('limit rows')
    group.add_argument('--m-infinity', default=LimitPolicy.m_infinity, type=float,
                       help='surrogate for m -> infinity')
    group.add_argument('--kappa-zero', default=LimitPolicy.kappa_zero, type=float,
                       help='surrogate for kappa -> 0')
    group.add_argument('--table-row', default='b', choices=TABLE_ROWS,
                       help='reduction row of one-sided Gaussian, Rayleigh and '
                            'Nakagami-m: b) m = mu, a) kappa -> 0 with m -> infinity')


def gamma_bar_factory(args):
    """Linear mean SNR from --gbar or --gbar-db"""
    if args.gbar_db is not None:
        return float(db_to_linear(args.gbar_db))
    if args.gbar is not None:
        if not args.gbar > 0:
            raise DomainError('--gbar must be positive, got {}'.format(args.gbar))
        return float(args.gbar)
    return 1.0


def model_factory(args):
    """Build the FadingModel selected by --model from its native flags.

    Raises:
        DomainError: a required flag is missing or a value is out of range
    """
    kwargs = {}
    for flag, field in MODEL_FLAGS[args.model]:
        value = getattr(args, flag)
        if value is None:
            raise DomainError('--{} is required for --model {}'.format(flag, args.model))
        kwargs[field] = value
    model = MODELS[args.model](gamma_bar=gamma_bar_factory(args), **kwargs)
    LOG.debug('fading model: %s', model)
    return model


def policy_factory(args):
    return LimitPolicy(m_infinity=args.m_infinity, kappa_zero=args.kappa_zero)
