import math
from dataclasses import dataclass
from typing import NamedTuple, Tuple

import numpy as np

from pystocknet import constants as c
from pystocknet.infostats.entropy import entropy_from_counts


@dataclass
class AdaptivePartition:
    """Rank-based equiprobable partition of a bivariate sample.

    Attributes
    ----------
    x_edges, y_edges : np.ndarray
        E + 1 bin boundaries per axis: the smallest value of every bin,
        followed by the largest sample value.
    x_labels, y_labels : np.ndarray
        Bin index of every sample.
    cell_counts : np.ndarray
        E x E occupancy grid, rows indexed by the x bin.

    """

    x_edges: np.ndarray
    y_edges: np.ndarray
    x_labels: np.ndarray
    y_labels: np.ndarray
    cell_counts: np.ndarray

    @property
    def n_bins(self) -> int:
        return self.cell_counts.shape[0]

    @property
    def n_samples(self) -> int:
        return int(self.cell_counts.sum())

    @property
    def x_counts(self) -> np.ndarray:
        return self.cell_counts.sum(axis=1)

    @property
    def y_counts(self) -> np.ndarray:
        return self.cell_counts.sum(axis=0)

    def entropies(self, bias_correction: str = c.DEFAULT_BIAS_CORRECTION
                  ) -> Tuple[float, float, float]:
        """Estimates of H(X), H(Y) and H(X, Y) in nats."""
        return (entropy_from_counts(self.x_counts, bias_correction),
                entropy_from_counts(self.y_counts, bias_correction),
                entropy_from_counts(self.cell_counts, bias_correction))

    def raw_mutual_information(
            self, bias_correction: str = c.DEFAULT_BIAS_CORRECTION) -> float:
        """H(X) + H(Y) - H(X, Y), not clamped at zero."""
        hx, hy, hxy = self.entropies(bias_correction)
        return hx + hy - hxy


class MutualInformation(NamedTuple):
    mi: float
    joint_entropy: float
    partition: AdaptivePartition


def number_of_bins(n_samples: int,
                   bins_rule: str = c.DEFAULT_BINS_RULE) -> int:
    """Number of equiprobable bins per axis.

    "sqrt_n_over_5": E = max(2, floor(sqrt(N / 5))), so that the expected
    cell occupancy under independence is at least 5.
    "cube_root": E = max(2, floor(N ** (1 / 3))).

    """
    if bins_rule == c.BINS_RULE_SQRT_N_OVER_5:
        return max(2, math.isqrt(n_samples // c.MIN_EXPECTED_CELL_OCCUPANCY))

    if bins_rule == c.BINS_RULE_CUBE_ROOT:
        root = int(round(n_samples ** (1 / 3)))
        while root ** 3 > n_samples:
            root -= 1
        while (root + 1) ** 3 <= n_samples:
            root += 1
        return max(2, root)

    raise ValueError(
        f"bins_rule {bins_rule!r} not understood. Choose one of "
        f"{', '.join(c.VALID_BINS_RULES)}")


def rank_bin_labels(values: np.ndarray, n_bins: int) -> np.ndarray:
    """Equiprobable bin index of every sample.

    Samples are ranked with ties broken by position, and rank r goes to bin
    floor(r * E / N), so bin sizes differ by at most one.

    """
    values = np.asarray(values)
    order = np.argsort(values, kind='stable')
    ranks = np.empty(len(values), dtype=np.int64)
    ranks[order] = np.arange(len(values))
    return ranks * n_bins // len(values)


def bin_edges(values: np.ndarray, n_bins: int) -> np.ndarray:
    sorted_values = np.sort(np.asarray(values, dtype=float), kind='stable')
    n_samples = len(sorted_values)
    # first rank of every bin is ceil(b * N / E)
    starts = -(-np.arange(n_bins) * n_samples // n_bins)
    return np.append(sorted_values[starts], sorted_values[-1])


def joint_counts(x_labels: np.ndarray, y_labels: np.ndarray,
                 n_bins: int) -> np.ndarray:
    """E x E contingency table of two label vectors."""
    return np.bincount(x_labels * n_bins + y_labels,
                       minlength=n_bins * n_bins).reshape(n_bins, n_bins)


def adaptive_partition(x, y, bins_rule: str = c.DEFAULT_BINS_RULE
                       ) -> AdaptivePartition:
    """Build the rank-based equiprobable partition of a bivariate sample.

    Raises
    ------
    ValueError
        If the lengths differ, values are not finite or fewer than 50
        samples are given.

    """
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)

    if x.shape != y.shape or x.ndim != 1:
        raise ValueError(
            f"Series must be one-dimensional with equal lengths, got "
            f"{x.shape} and {y.shape}")
    if len(x) < c.MIN_MI_SAMPLES:
        raise ValueError(
            f"Mutual information needs at least {c.MIN_MI_SAMPLES} samples, "
            f"got {len(x)}")
    if not (np.isfinite(x).all() and np.isfinite(y).all()):
        raise ValueError("Series contain non-finite values")

    n_bins = number_of_bins(len(x), bins_rule)
    x_labels = rank_bin_labels(x, n_bins)
    y_labels = rank_bin_labels(y, n_bins)

    return AdaptivePartition(
        x_edges=bin_edges(x, n_bins),
        y_edges=bin_edges(y, n_bins),
        x_labels=x_labels,
        y_labels=y_labels,
        cell_counts=joint_counts(x_labels, y_labels, n_bins))


def mutual_information_adaptive(
        x, y,
        bins_rule: str = c.DEFAULT_BINS_RULE,
        bias_correction: str = c.DEFAULT_BIAS_CORRECTION
) -> MutualInformation:
    """Adaptive-partition estimate of the mutual information of two series.

    I = H(X) + H(Y) - H(X, Y) over rank-based equiprobable bins. With
    bias_correction="none" this equals the plug-in sum
    sum(p_ij ln(p_ij / (p_i p_j))). Negative estimates are clamped to 0.

    Returns
    -------
    MutualInformation
        (mi, joint_entropy, partition), entropies in nats.

    """
    partition = adaptive_partition(x, y, bins_rule)
    hx, hy, hxy = partition.entropies(bias_correction)

    mi = min(max(hx + hy - hxy, 0.0), hxy)

    return MutualInformation(mi=mi, joint_entropy=hxy, partition=partition)
