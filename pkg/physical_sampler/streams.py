"""Reproducible random streams

Every block of draws gets its own counter-based Philox generator whose key is
derived from (seed, stream index) through numpy's SeedSequence, so a batch
is the same whichever worker draws which block.
"""
import numpy as np

SEED_BITS = 64


def check_seed(seed):
    seed = int(seed)
    if not 0 <= seed < 2 ** SEED_BITS:
        raise ValueError('seed must be a {}-bit nonnegative integer, got {}'.format(SEED_BITS, seed))
    return seed


def stream_generator(seed, stream):
    """Generator of the ``stream``-th substream of ``seed``"""
    sequence = np.random.SeedSequence(entropy=check_seed(seed), spawn_key=(int(stream),))
    return np.random.Generator(np.random.Philox(sequence))


def derive_seed(seed, *keys):
    """A 64-bit seed for the child identified by integer ``keys``"""
    sequence = np.random.SeedSequence(entropy=check_seed(seed), spawn_key=tuple(int(k) for k in keys))
    return int(sequence.generate_state(1, dtype=np.uint64)[0])
