"""Finite-difference check of the capacity loss"""
from channel_models.moments import normalized_moment
from .loss import LOG2E

STEP = 1e-4


def af_derivative_oracle(p, h=STEP, ctrl=None):
    """dAF/dn at n = 0 by central differences of the moment formula

    One Richardson level combines the steps h and h/2.
    """
    def central(step):
        upper = normalized_moment(p, step, ctrl) - 1.0
        lower = normalized_moment(p, -step, ctrl) - 1.0
        return (upper - lower) / (2.0 * step)
    return (4.0 * central(0.5 * h) - central(h)) / 3.0


def loss_oracle(p, h=STEP, ctrl=None):
    """Capacity loss -log2(e) dAF/dn at n = 0, in bps/Hz"""
    return -LOG2E * af_derivative_oracle(p, h, ctrl)
