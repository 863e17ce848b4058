"""Sample batches and their on-disk form

A batch is written as one column of linear SNR values, either CSV (header
``snr``, ``%.12e``) or flat little-endian float64, next to a JSON sidecar
``<path>.json`` recording seed, model, mean SNR and count.
"""
import json
import logging
from dataclasses import dataclass

import numpy as np

from utils.util import linear_to_db

LOG = logging.getLogger(__name__)

FORMATS = ('csv', 'bin')


@dataclass(frozen=True, eq=False)
class SampleBatch:
    snr_values: np.ndarray
    seed: int
    model_tag: str
    gamma_bar_target: float

    def __post_init__(self):
        values = np.array(self.snr_values, dtype=float)
        if values.ndim != 1 or values.size == 0:
            raise ValueError('a batch holds a non-empty 1-d array of SNR values')
        if np.any(values < 0):
            raise ValueError('SNR values must be nonnegative')
        values.setflags(write=False)
        object.__setattr__(self, 'snr_values', values)

    @property
    def count(self):
        return int(self.snr_values.size)

    def sidecar(self):
        return {
            'seed': int(self.seed),
            'model': self.model_tag,
            'gamma_bar': float(self.gamma_bar_target),
            'gamma_bar_db': float(linear_to_db(self.gamma_bar_target)),
            'count': self.count,
        }


def save_batch(batch, path, fmt='csv'):
    if fmt not in FORMATS:
        raise ValueError('batch format must be one of {}, got {!r}'.format(FORMATS, fmt))
    if fmt == 'csv':
        np.savetxt(path, batch.snr_values, fmt='%.12e', delimiter=',', newline='\n',
                   header='snr', comments='')
    else:
        batch.snr_values.astype('<f8').tofile(path)
    meta = dict(batch.sidecar(), format=fmt)
    with open(str(path) + '.json', 'w', newline='\n') as f:
        json.dump(meta, f, indent=2, sort_keys=True)
        f.write('\n')
    LOG.info({'type': 'batch', 'path': str(path), **meta})


def load_batch(path):
    with open(str(path) + '.json') as f:
        meta = json.load(f)
    if meta.get('format', 'csv') == 'csv':
        values = np.loadtxt(path, delimiter=',', skiprows=1, ndmin=1)
    else:
        values = np.fromfile(path, dtype='<f8')
    return SampleBatch(values, meta['seed'], meta['model'], meta['gamma_bar'])
