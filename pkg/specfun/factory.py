import logging

from .series import SeriesControl

LOG = logging.getLogger(__name__)


def series_cli(parser):
    group = parser.add_argument_group('series convergence')
    group.add_argument('--rel-tol', default=SeriesControl.rel_tol, type=float,
                       help='a series stops after two consecutive terms below '
                            'rel-tol times the running sum')
    group.add_argument('--max-terms', default=SeriesControl.max_terms, type=int,
                       help='term budget of every hypergeometric series')


def series_factory(args):
    """Build the SeriesControl shared by every evaluation of one run."""
    ctrl = SeriesControl(rel_tol=args.rel_tol, max_terms=args.max_terms)
    LOG.debug('series control: %s', ctrl)
    return ctrl
