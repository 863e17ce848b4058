import logging

from specfun.errors import DomainError
from .checks import VerifyContext

LOG = logging.getLogger(__name__)


def verify_cli(parser):
    group = parser.add_argument_group('verification')
    group.add_argument('--tolerance', default=None, type=float,
                       help='replace the default tolerance of every check')
    group.add_argument('--points', default=None, type=int,
                       help='random parameter triples of every randomized check; '
                            'each check uses its own count when omitted')
    group.add_argument('--report', default=None,
                       help='write the json report of all checks to this path')


def verify_factory(args, run, policy, ctrl):
    if args.tolerance is not None and not args.tolerance > 0:
        raise DomainError('--tolerance must be positive, got {}'.format(args.tolerance))
    if args.points is not None and args.points < 1:
        raise DomainError('--points must be positive, got {}'.format(args.points))
    ctx = VerifyContext(seed=run.seed, mc_samples=run.mc_samples, tolerance=args.tolerance,
                        points=args.points, policy=policy, ctrl=ctrl)
    LOG.debug('verify context: %s', ctx)
    return ctx
