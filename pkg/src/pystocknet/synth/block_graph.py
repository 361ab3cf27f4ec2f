from typing import List

import numpy as np


def generate_block_adjacency(block_sizes: List[int],
                             bridges: int = 1) -> np.ndarray:
    """Adjacency matrix of complete blocks joined in a chain.

    Consecutive blocks b and b + 1 are joined by `bridges` edges, edge t
    linking node t of block b to node t of block b + 1.

    Raises
    ------
    ValueError
        If a block is smaller than the number of bridges.

    """
    if bridges < 0:
        raise ValueError(f"bridges must be non-negative, got {bridges}")
    if any(size < max(1, bridges) for size in block_sizes):
        raise ValueError(
            f"Every block needs at least max(1, bridges) = {max(1, bridges)} "
            f"nodes, got {block_sizes}")

    starts = np.concatenate([[0], np.cumsum(block_sizes)])
    adjacency = np.zeros((starts[-1], starts[-1]))

    for start, stop in zip(starts[:-1], starts[1:]):
        adjacency[start:stop, start:stop] = 1.0

    for block in range(len(block_sizes) - 1):
        for t in range(bridges):
            i, j = starts[block] + t, starts[block + 1] + t
            adjacency[i, j] = adjacency[j, i] = 1.0

    np.fill_diagonal(adjacency, 0.0)
    return adjacency
