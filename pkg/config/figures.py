"""Parameter sets and sweeps of the capacity figures"""
import logging
from dataclasses import dataclass

import numpy as np

from channel_models.params import (Awgn, OneSidedGaussian, Rayleigh, NakagamiM, NakagamiQ,
                                   Rician, KappaMu, EtaMu, KappaMuShadowed)

LOG = logging.getLogger(__name__)

# curve kinds
CAPACITY = 'capacity'
LOSS_KMS = 'loss_kappa_mu_shadowed'
LOSS_KMU = 'loss_kappa_mu'
LOSS_EMU = 'loss_eta_mu'

GBAR_DB = tuple(float(v) for v in np.arange(0, 31))
KAPPA = tuple(float(v) for v in np.linspace(0.0, 20.0, 81))
ETA = tuple(float(v) for v in np.logspace(-3.0, 3.0, 121))
MU_SWEEP = (0.5, 0.7, 1.0, 1.5, 3.0, 20.0)


def slug(value):
    """Number as it appears in a file label: 1.5 -> '1p5', 20.0 -> '20'"""
    return '{:g}'.format(value).replace('.', 'p').replace('-', 'm')


@dataclass(frozen=True)
class CurveSpec:
    label: str
    model: object = None
    mu: float = None
    m: float = None


@dataclass(frozen=True)
class FigureSpec:
    figure_id: int
    title: str
    kind: str
    axis: str
    grid: tuple
    curves: tuple
    notes: tuple = ()

    def __post_init__(self):
        grid = np.asarray(self.grid)
        if grid.size == 0 or np.any(np.diff(grid) <= 0):
            raise ValueError('figure {} needs a non-empty increasing grid'.format(self.figure_id))
        if not 1 <= self.figure_id <= 8:
            raise ValueError('figure id must lie in 1..8, got {}'.format(self.figure_id))

    def file_name(self, curve):
        return 'fig{}_{}.csv'.format(self.figure_id, curve.label)


def _mu_curves(m=None):
    return tuple(CurveSpec('mu' + slug(mu), mu=mu, m=m) for mu in MU_SWEEP)


FIGURES = {
    1: FigureSpec(
        1, 'Ergodic capacity of classic fading models and their asymptotes', CAPACITY,
        'gbar_db', GBAR_DB,
        (CurveSpec('awgn', Awgn()),
         CurveSpec('rician_K10', Rician(K=10.0)),
         CurveSpec('nakagami_m1p5', NakagamiM(m=1.5)),
         CurveSpec('rayleigh', Rayleigh()),
         CurveSpec('hoyt_q0p2', NakagamiQ(q=0.2)),
         CurveSpec('osg', OneSidedGaussian())),
        ('The Nakagami-m curve uses the legend value m=1.5; one asymptote data set '
         'accompanying the original figure references m=10.',)),
    2: FigureSpec(
        2, 'Ergodic capacity of generalized fading models and their asymptotes', CAPACITY,
        'gbar_db', GBAR_DB,
        (CurveSpec('awgn', Awgn()),
         CurveSpec('kmu_kappa2p7_mu2p4', KappaMu(kappa=2.7, mu=2.4)),
         CurveSpec('emu_eta0p5_mu1p2', EtaMu(eta=0.5, mu=1.2)),
         CurveSpec('kms_kappa1p5_mu1p2_m2p3', KappaMuShadowed(kappa=1.5, mu=1.2, m=2.3)))),
    3: FigureSpec(3, 'kappa-mu shadowed capacity loss versus kappa, m=0.5', LOSS_KMS,
                  'kappa', KAPPA, _mu_curves(0.5)),
    4: FigureSpec(4, 'kappa-mu shadowed capacity loss versus kappa, m=1', LOSS_KMS,
                  'kappa', KAPPA, _mu_curves(1.0)),
    5: FigureSpec(5, 'kappa-mu shadowed capacity loss versus kappa, m=3', LOSS_KMS,
                  'kappa', KAPPA, _mu_curves(3.0)),
    6: FigureSpec(6, 'kappa-mu shadowed capacity loss versus kappa, m=20', LOSS_KMS,
                  'kappa', KAPPA, _mu_curves(20.0)),
    7: FigureSpec(7, 'kappa-mu capacity loss versus kappa', LOSS_KMU, 'kappa', KAPPA,
                  _mu_curves()),
    8: FigureSpec(8, 'eta-mu capacity loss versus eta', LOSS_EMU, 'eta', ETA,
                  _mu_curves() + (CurveSpec('rayleigh', Rayleigh()),
                                  CurveSpec('osg', OneSidedGaussian()))),
}
