import logging
from itertools import combinations
from typing import Optional, Tuple

import numpy as np
from joblib import Parallel, delayed
from tqdm import tqdm

from pystocknet import constants as c
from pystocknet.infostats.correlation import correlation_matrix
from pystocknet.infostats.entropy import (
    entropy_from_counts, mi_distance, normalized_mi)
from pystocknet.infostats.mutual_information import (
    joint_counts, number_of_bins, rank_bin_labels)
from pystocknet.infostats.pair_matrix import PairMatrix
from pystocknet.infostats.permutation_test import (
    permutation_p_value, validate_test_parameters)
from pystocknet.random_streams import derive_rng
from pystocknet.settings_pystocknet import EstimatorSettings

logger = logging.getLogger(__name__)

STREAM_PAIRS = 'pairs'


def pair_sweep(panel, estimator: EstimatorSettings, seed: int,
               period: Optional[str] = None) -> PairMatrix:
    """Correlation, mutual information and distances of all symbol pairs.

    Every pair (i, j), i < j, owns a generator derived from (seed, "pairs",
    period, i, j), so the result does not depend on estimator.n_jobs.

    Parameters
    ----------
    panel : ReturnsPanel
        Panel with at least 2 symbols and 50 observations.
    estimator : EstimatorSettings
        Bins rule, bias correction, permutation trials, alpha and n_jobs.
    seed : int
        Master seed.
    period : str, optional
        Stream key of the period, by default panel.period.

    Returns
    -------
    PairMatrix
        All fields set.

    """
    validate_test_parameters(estimator.permutation_trials, estimator.alpha)
    period = panel.period if period is None else period

    correlations = correlation_matrix(panel)

    matrix = panel.matrix
    n_samples, n_symbols = matrix.shape
    if n_samples < c.MIN_MI_SAMPLES:
        raise ValueError(
            f"Panel {period!r} has {n_samples} observations, mutual "
            f"information needs at least {c.MIN_MI_SAMPLES}")

    n_bins = number_of_bins(n_samples, estimator.bins_rule)
    labels = np.column_stack(
        [rank_bin_labels(matrix[:, column], n_bins)
         for column in range(n_symbols)])
    marginal = np.array(
        [entropy_from_counts(np.bincount(labels[:, column], minlength=n_bins),
                             estimator.bias_correction)
         for column in range(n_symbols)])

    pairs = list(combinations(range(n_symbols), 2))
    logger.info(f"Pair sweep over {len(pairs)} pairs of period {period!r} "
                f"with {n_bins} bins per axis")

    results = Parallel(n_jobs=estimator.n_jobs)(
        delayed(_pair_statistics)(
            labels[:, i], labels[:, j], n_bins, marginal[i], marginal[j],
            estimator, derive_rng(seed, STREAM_PAIRS, period, i, j))
        for i, j in tqdm(pairs, desc=f'Pairs {period}', leave=False))

    raw_mi = np.diag(marginal).astype(float)
    joint_entropy = np.diag(marginal).astype(float)
    p_value = np.zeros((n_symbols, n_symbols))
    for (i, j), (pair_mi, pair_hxy, pair_p) in zip(pairs, results):
        raw_mi[i, j] = raw_mi[j, i] = pair_mi
        joint_entropy[i, j] = joint_entropy[j, i] = pair_hxy
        p_value[i, j] = p_value[j, i] = pair_p

    clamped = np.minimum(np.maximum(raw_mi, 0.0), joint_entropy)
    accepted = np.where(p_value <= estimator.alpha, clamped, 0.0)

    nmi = np.eye(n_symbols)
    raw_nmi = np.eye(n_symbols)
    d_mi = np.zeros((n_symbols, n_symbols))
    for i, j in pairs:
        nmi[i, j] = nmi[j, i] = normalized_mi(
            accepted[i, j], marginal[i], marginal[j])
        raw_nmi[i, j] = raw_nmi[j, i] = normalized_mi(
            clamped[i, j], marginal[i], marginal[j])
        d_mi[i, j] = d_mi[j, i] = mi_distance(
            accepted[i, j], joint_entropy[i, j])

    n_zeroed = sum(1 for i, j in pairs if accepted[i, j] == 0)
    logger.info(f"Permutation test zeroed {n_zeroed} of {len(pairs)} pairs "
                f"at alpha={estimator.alpha}")

    return PairMatrix(
        symbols=panel.symbols,
        rho=correlations.rho,
        mi=accepted,
        raw_mi=raw_mi,
        nmi=nmi,
        raw_nmi=raw_nmi,
        joint_entropy=joint_entropy,
        p_value=p_value,
        d_corr=correlations.d_corr,
        d_mi=d_mi)


def _pair_statistics(x_labels: np.ndarray, y_labels: np.ndarray,
                     n_bins: int, hx: float, hy: float,
                     estimator: EstimatorSettings,
                     rng: np.random.Generator) -> Tuple[float, float, float]:
    hxy = entropy_from_counts(joint_counts(x_labels, y_labels, n_bins),
                              estimator.bias_correction)
    observed = hx + hy - hxy

    p_value = permutation_p_value(
        x_labels, y_labels, n_bins, observed,
        estimator.permutation_trials, rng, estimator.bias_correction)

    return observed, hxy, p_value
