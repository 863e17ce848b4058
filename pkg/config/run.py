"""Run-wide settings shared by the subcommands"""
import logging
import os
from dataclasses import dataclass

from specfun.errors import DomainError

LOG = logging.getLogger(__name__)

SEED_ENV = 'FADINGLAB_SEED'
OUTPUT_FORMATS = ('csv', 'json')
MIN_MC_SAMPLES = 1000


@dataclass(frozen=True)
class RunConfig:
    seed: int = 0
    mc_samples: int = 1000000
    output_format: str = 'csv'
    out_path: str = None

    def __post_init__(self):
        if not 0 <= self.seed < 2 ** 64:
            raise DomainError('seed must be a 64-bit nonnegative integer, got {}'.format(self.seed))
        if self.mc_samples < 1:
            raise DomainError('--samples must be positive, got {}'.format(self.mc_samples))
        if self.output_format not in OUTPUT_FORMATS:
            raise DomainError('unknown output format {!r}'.format(self.output_format))

    def require_mc(self):
        if self.mc_samples < MIN_MC_SAMPLES:
            raise DomainError('Monte Carlo runs need --samples >= {}, got {}'.format(
                MIN_MC_SAMPLES, self.mc_samples))


def run_cli(parser):
    group = parser.add_argument_group('run')
    group.add_argument('--seed', default=None, type=int,
                       help='64-bit seed; falls back to ${} and then to 0'.format(SEED_ENV))
    group.add_argument('--samples', default=RunConfig.mc_samples, type=int,
                       help='Monte Carlo sample count')
    group.add_argument('--format', default=RunConfig.output_format, choices=OUTPUT_FORMATS,
                       help='table format')
    group.add_argument('--out', default=None,
                       help='output file (directory for figure); stdout when omitted')


def resolve_seed(seed, environ=None):
    environ = os.environ if environ is None else environ
    if seed is not None:
        return seed
    text = environ.get(SEED_ENV)
    if text is None or not text.strip():
        return RunConfig.seed
    try:
        return int(text, 0)
    except ValueError:
        raise DomainError('{} must be an integer, got {!r}'.format(SEED_ENV, text)) from None


def run_factory(args):
    config = RunConfig(resolve_seed(args.seed), args.samples, args.format, args.out)
    LOG.debug('run config: %s', config)
    return config
