import math

import numpy as np


def boolean_string(s):
    """Enable {'False', 'True'} string args in command line"""
    if s not in {'False', 'True'}:
        raise ValueError('Not a valid boolean string')
    return s == 'True'


def db_to_linear(db):
    return 10.0 ** (np.asarray(db, dtype=float) / 10.0)


def linear_to_db(linear):
    return 10.0 * np.log10(np.asarray(linear, dtype=float))


def parse_grid(text):
    """'start:stop:step' (stop included) or a comma separated list of values"""
    if ':' not in text:
        values = np.array([float(v) for v in text.split(',') if v.strip()])
    else:
        start, stop, step = (float(v) for v in text.split(':'))
        if step <= 0 or stop < start:
            raise ValueError('grid needs start <= stop and a positive step: {}'.format(text))
        count = int(math.floor((stop - start) / step + 1e-9)) + 1
        values = start + step * np.arange(count)
    if values.size == 0 or np.any(np.diff(values) <= 0):
        raise ValueError('grid must be non-empty and strictly increasing: {}'.format(text))
    return values


class AverageMeter(object):
    """Running count, mean and sum of squared deviations of a stream of values

    Batches are merged with the pairwise update, so feeding a sample in one
    array or in chunks gives the same mean up to rounding.
    """

    def __init__(self):
        self.count = 0
        self.avg = 0.0
        self.m2 = 0.0

    def update(self, values):
        values = np.asarray(values, dtype=float).ravel()
        n = values.size
        if n == 0:
            return
        mean = float(values.mean())
        m2 = float(np.sum((values - mean) ** 2))
        total = self.count + n
        delta = mean - self.avg
        self.m2 += m2 + delta * delta * self.count * n / total
        self.avg += delta * n / total
        self.count = total

    @property
    def variance(self):
        return self.m2 / (self.count - 1) if self.count > 1 else 0.0

    @property
    def std_error(self):
        return math.sqrt(self.variance / self.count) if self.count else 0.0
