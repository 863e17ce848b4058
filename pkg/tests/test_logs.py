import argparse
import json
import logging

import pytest

import logs


def _args(argv):
    parser = argparse.ArgumentParser()
    logs.cli(parser)
    return parser.parse_args(argv)


def test_json_records_written_to_file(out_dir, root_logger):
    prefix = str(out_dir / 'run')
    assert logs.configure(_args(['--logging-output', prefix])) == logging.INFO
    logging.getLogger('capacity.loss').info({'type': 'loss', 'value': 0.5})
    records = [json.loads(line) for line in open(prefix + '.log')]
    assert records[0]['type'] == 'process'
    assert records[-1]['type'] == 'loss'
    assert records[-1]['name'] == 'capacity.loss'


def test_logging_write_false_keeps_file_closed(out_dir, root_logger):
    prefix = str(out_dir / 'run')
    logs.configure(_args(['--logging-output', prefix, '--logging-write', 'False']))
    assert not (out_dir / 'run.log').exists()


def test_levels_and_series_logger(root_logger):
    assert logs.configure(_args(['--debug'])) == logging.DEBUG
    assert logging.getLogger('specfun').level == logging.WARNING
    assert logs.configure(_args(['-q', '--shut-series-logging', 'False'])) == logging.WARNING


def test_boolean_flags_reject_other_strings():
    with pytest.raises(SystemExit):
        _args(['--logging-write', 'yes'])
