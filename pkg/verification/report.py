"""Machine-readable report of a verify run"""
import json
import logging

import jsonschema

LOG = logging.getLogger(__name__)

NUMBER_OR_NULL = {'type': ['number', 'null']}

REPORT_SCHEMA = {
    '$schema': 'http://json-schema.org/draft-07/schema#',
    'type': 'object',
    'required': ['passed', 'seed', 'mc_samples', 'tolerance', 'checks'],
    'properties': {
        'passed': {'type': 'boolean'},
        'seed': {'type': 'integer', 'minimum': 0},
        'mc_samples': {'type': 'integer', 'minimum': 1},
        'tolerance': NUMBER_OR_NULL,
        'checks': {
            'type': 'array',
            'minItems': 1,
            'items': {
                'type': 'object',
                'required': ['name', 'passed', 'max_error', 'tolerance', 'detail'],
                'properties': {
                    'name': {'type': 'string'},
                    'passed': {'type': 'boolean'},
                    'max_error': NUMBER_OR_NULL,
                    'tolerance': NUMBER_OR_NULL,
                    'detail': {'type': 'object'},
                },
            },
        },
    },
}


def build_report(ctx, results):
    """Validated report dict of the check ``results`` run under ``ctx``"""
    report = {
        'passed': all(r.passed for r in results),
        'seed': int(ctx.seed),
        'mc_samples': int(ctx.mc_samples),
        'tolerance': ctx.tolerance,
        'checks': [r.as_dict() for r in results],
    }
    jsonschema.validate(report, REPORT_SCHEMA)
    return report


def write_report(report, path):
    with open(path, 'w', newline='\n') as f:
        json.dump(report, f, indent=2, sort_keys=True, default=_plain)
        f.write('\n')
    LOG.info({'type': 'report', 'path': path, 'passed': report['passed']})
    return path


def _plain(value):
    # numpy scalars and arrays inside check details
    if hasattr(value, 'tolist'):
        return value.tolist()
    raise TypeError('{!r} is not JSON serializable'.format(value))


def summary_lines(report):
    lines = []
    for check in report['checks']:
        error = check['max_error']
        lines.append('{:<28} {:<4} {}'.format(
            check['name'], 'ok' if check['passed'] else 'FAIL',
            '' if error is None else 'max_error={:.3e} tol={:.1e}'.format(error, check['tolerance'])))
    lines.append('verify: {}'.format('passed' if report['passed'] else 'FAILED'))
    return lines
