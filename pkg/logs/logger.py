"""Detailed logger"""
import sys
import logging
from utils.util import boolean_string


LOG = logging.getLogger(__name__)

JSON_FIELDS = '(message) (levelname) (name) (asctime)'


def cli(parser):
    group = parser.add_argument_group('logging')
    group.add_argument('--logging-output', default=None, type=str,
                       help='path prefix of the json log file, <prefix>.log')
    group.add_argument('--logging-stdout', default=False, type=boolean_string,
                       help='echo the detailed log to the stderr stream')
    group.add_argument('--logging-write', default=True, type=boolean_string,
                       help='write the detailed log into the --logging-output file')
    group.add_argument('--debug', default=False, action='store_true',
                       help='print debug messages')
    group.add_argument('-q', '--quiet', default=False, action='store_true',
                       help='only show warning messages or above')
    group.add_argument('--shut-series-logging', default=True, type=boolean_string,
                       help='shut up the per-series debug logging of the special functions')


def configure(args):
    from pythonjsonlogger import jsonlogger
    # stdout carries result tables, so the echo goes to stderr
    formatter = jsonlogger.JsonFormatter(JSON_FIELDS)

    log_level = logging.INFO
    if args.debug:
        log_level = logging.DEBUG
    if args.quiet:
        log_level = logging.WARNING

    logger = logging.getLogger('')  # control level at the top root
    logger.setLevel(log_level)

    if args.logging_stdout:
        stream_handler = logging.StreamHandler(sys.stderr)
        stream_handler.setFormatter(formatter)
        logger.addHandler(stream_handler)
    if args.logging_output and args.logging_write:
        file_handler = logging.FileHandler(args.logging_output + '.log', mode='a')
        file_handler.setFormatter(formatter)
        logger.addHandler(file_handler)

    if args.shut_series_logging:
        logging.getLogger('specfun').setLevel(logging.WARNING)

    LOG.info({
        'type': 'process',
        'argv': sys.argv,
        'args': {k: v for k, v in vars(args).items() if k != 'func'},
    })
    return log_level
