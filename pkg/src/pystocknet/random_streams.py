import zlib
from typing import Union

import numpy as np

StreamKey = Union[int, str]


def derive_rng(master_seed: int, *keys: StreamKey) -> np.random.Generator:
    """Create the random generator of a named sub-stream.

    Every source of randomness in pystocknet is derived from one master
    seed and a tuple of keys (stage, period, pair or trial index). Two
    calls with the same seed and keys return generators producing the same
    stream, regardless of process, platform or the order in which streams
    are created.

    Parameters
    ----------
    master_seed : int
        The run's master seed.
    *keys : Union[int, str]
        Sub-stream keys. Strings are mapped to integers with CRC-32.

    Returns
    -------
    np.random.Generator
        Generator seeded from SeedSequence([master_seed, *keys]).

    """
    entropy = [int(master_seed)] + [_key_to_int(key) for key in keys]
    return np.random.default_rng(np.random.SeedSequence(entropy))


def _key_to_int(key: StreamKey) -> int:
    if isinstance(key, str):
        return zlib.crc32(key.encode('utf-8'))

    key = int(key)
    if key < 0:
        raise ValueError(f"Stream keys must be non-negative, got {key}")

    return key
