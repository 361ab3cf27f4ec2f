import logging
from typing import Dict, Union

import numpy as np

from pystocknet import constants as c
from pystocknet.infostats.pair_matrix import PairMatrix

logger = logging.getLogger(__name__)

# whisker reach in interquartile ranges
WHISKER_IQR = 1.5


def pearson_correlation(x, y) -> float:
    """Sample Pearson correlation coefficient of two series.

    Raises
    ------
    ValueError
        If the lengths differ, fewer than 2 samples are given, or a series
        is constant (the coefficient is undefined).

    """
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)

    if x.shape != y.shape or x.ndim != 1:
        raise ValueError(
            f"Series must be one-dimensional with equal lengths, got "
            f"{x.shape} and {y.shape}")
    if len(x) < 2:
        raise ValueError("At least 2 samples are needed for a correlation")

    dx = x - x.mean()
    dy = y - y.mean()
    sxx = np.dot(dx, dx)
    syy = np.dot(dy, dy)

    if sxx == 0 or syy == 0:
        raise ValueError("Correlation of a constant series is undefined")

    return float(np.clip(np.dot(dx, dy) / np.sqrt(sxx * syy), -1.0, 1.0))


def correlation_matrix(panel) -> PairMatrix:
    """Pearson correlation matrix of the columns of a returns panel.

    Parameters
    ----------
    panel : ReturnsPanel
        Panel with k >= 2 non-constant columns.

    Returns
    -------
    PairMatrix
        With the rho and d_corr fields set: symmetric, unit diagonal.

    """
    matrix = panel.matrix
    if matrix.shape[1] < 2:
        raise ValueError("A correlation matrix needs at least 2 symbols")
    if matrix.shape[0] < 2:
        raise ValueError("A correlation matrix needs at least 2 observations")

    constant = np.ptp(matrix, axis=0) == 0
    if constant.any():
        names = [symbol for symbol, flag in zip(panel.symbols, constant)
                 if flag]
        raise ValueError(
            f"Correlation is undefined for constant columns: "
            f"{', '.join(names)}")

    rho = np.corrcoef(matrix, rowvar=False)
    rho = np.clip((rho + rho.T) / 2, -1.0, 1.0)
    np.fill_diagonal(rho, 1.0)

    logger.debug(f"Correlation matrix of {matrix.shape[1]} symbols over "
                 f"{matrix.shape[0]} observations")

    return PairMatrix(symbols=panel.symbols, rho=rho, d_corr=corr_distance(rho))


def corr_distance(rho: Union[float, np.ndarray]) -> Union[float, np.ndarray]:
    """Correlation distance d = sqrt(2 (1 - rho)) in [0, 2].

    Raises
    ------
    ValueError
        If rho lies outside [-1, 1].

    """
    values = np.asarray(rho, dtype=float)
    if np.any(np.abs(values) > 1 + c.TOL_SYMMETRY):
        raise ValueError("Correlation coefficients must lie in [-1, 1]")

    distance = np.sqrt(2 * (1 - np.clip(values, -1.0, 1.0)))
    if np.ndim(rho) == 0:
        return float(distance)

    return distance


def correlation_distribution_summary(pairs: PairMatrix) -> Dict[str, float]:
    """Box-plot statistics of the off-diagonal correlation coefficients.

    Returns
    -------
    Dict[str, float]
        n_pairs, mean, min, q1, median, q3, max and the whisker ends
        (most extreme coefficients within 1.5 IQR of the quartiles).

    """
    upper = pairs.rho[np.triu_indices(len(pairs.symbols), k=1)]
    q1, median, q3 = np.percentile(upper, [25, 50, 75])
    iqr = q3 - q1

    inside = upper[(upper >= q1 - WHISKER_IQR * iqr) &
                   (upper <= q3 + WHISKER_IQR * iqr)]

    return {
        'n_pairs': int(len(upper)),
        'mean': float(upper.mean()),
        'min': float(upper.min()),
        'q1': float(q1),
        'median': float(median),
        'q3': float(q3),
        'max': float(upper.max()),
        'whisker_low': float(inside.min()),
        'whisker_high': float(inside.max()),
        'outliers': int(len(upper) - len(inside)),
    }
