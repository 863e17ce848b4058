import logging

import numpy as np
import pytest

from channel_models.params import ShadowedParams, LimitPolicy
from specfun.series import SeriesControl


@pytest.fixture
def ctrl():
    return SeriesControl()


@pytest.fixture
def policy():
    return LimitPolicy()


@pytest.fixture
def rng():
    return np.random.default_rng(20190527)


@pytest.fixture
def out_dir(tmp_path):
    path = tmp_path / 'out'
    path.mkdir()
    return path


@pytest.fixture
def kms_params():
    """kappa-mu shadowed legend entry of the generalized-model capacity figure"""
    return ShadowedParams(1.5, 1.2, 2.3)


@pytest.fixture
def root_logger():
    """root logger whose handlers and level are restored after the test"""
    logger = logging.getLogger('')
    handlers, level = list(logger.handlers), logger.level
    yield logger
    for handler in logger.handlers:
        if handler not in handlers:
            handler.close()
    logger.handlers[:] = handlers
    logger.setLevel(level)
