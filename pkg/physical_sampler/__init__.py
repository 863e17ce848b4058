"""Monte Carlo draws of the instantaneous SNR and their goodness of fit."""

from .generative import CommonShadow, IidShadow, ConditionalGamma
from .batch import SampleBatch, save_batch, load_batch
from .streams import stream_generator, derive_seed
from .sampler import (sample, sample_common_shadow, sample_iid_shadow, sample_conditional,
                      BLOCK_SIZE)
from .gof import (GofResult, TabulatedCdf, chi_square_gof, ks_one_sample, ks_two_sample, ALPHA)
from .factory import sampler_cli, sampler_factory, ENGINES
