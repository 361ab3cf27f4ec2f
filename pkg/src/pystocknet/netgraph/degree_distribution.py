import logging
from dataclasses import dataclass
from typing import Dict, List, Tuple

import numpy as np
import pandas as pd
from scipy.special import zeta

from pystocknet import constants as c
from pystocknet.netgraph.graph_class import SpanningTree

logger = logging.getLogger(__name__)


@dataclass
class DegreeDistribution:
    """Degree statistics of a spanning tree.

    Attributes
    ----------
    degrees : np.ndarray
        Degree of every node.
    alpha_hat : float
        Discrete-corrected power-law exponent estimate.
    alpha_hat_uncorrected : float
        Continuous power-law exponent estimate, NaN if undefined.
    x_min : int
        Lower cutoff of the power law.
    hubs : List[int]
        Nodes with degree above the hub threshold.

    """

    degrees: np.ndarray
    alpha_hat: float
    alpha_hat_uncorrected: float
    x_min: int
    hubs: List[int]

    def histogram(self) -> pd.DataFrame:
        """Columns degree, count, empirical_pmf and fitted_pmf for every
        degree from x_min to the maximum degree."""
        support = np.arange(self.x_min, self.degrees.max() + 1)
        counts = np.array([np.sum(self.degrees == d) for d in support])
        return pd.DataFrame({
            'degree': support,
            'count': counts,
            'empirical_pmf': counts / len(self.degrees),
            'fitted_pmf': fitted_pmf(support, self.alpha_hat, self.x_min),
        })


def degree_distribution(tree: SpanningTree, x_min: int = c.DEFAULT_X_MIN,
                        hub_threshold: int = c.DEFAULT_HUB_THRESHOLD
                        ) -> DegreeDistribution:
    """Degrees, power-law exponent fits and hubs of a tree."""
    degrees = tree.degrees()

    try:
        uncorrected = powerlaw_mle(degrees, x_min, corrected=False)
    except ValueError:
        logger.warning("Uncorrected power-law exponent is undefined when "
                       "every degree equals x_min")
        uncorrected = float('nan')

    return DegreeDistribution(
        degrees=degrees,
        alpha_hat=powerlaw_mle(degrees, x_min, corrected=True),
        alpha_hat_uncorrected=uncorrected,
        x_min=x_min,
        hubs=[int(node) for node in np.flatnonzero(degrees > hub_threshold)])


def powerlaw_mle(degrees, x_min: int = c.DEFAULT_X_MIN,
                 corrected: bool = True) -> float:
    """Maximum likelihood power-law exponent of a degree sequence.

    corrected: alpha = 1 + n / sum(ln(d / (x_min - 1/2))), the continuous
    estimate with the usual shift for integer data.
    uncorrected: alpha = 1 + n / sum(ln(d / x_min)).

    Raises
    ------
    ValueError
        If a degree is below x_min, or if every degree equals x_min in the
        uncorrected form.

    """
    degrees = np.asarray(degrees, dtype=float)
    if degrees.size == 0:
        raise ValueError("Empty degree sequence")
    if np.any(degrees < x_min):
        raise ValueError(f"All degrees must be >= x_min={x_min}")

    scale = x_min - 0.5 if corrected else x_min
    log_sum = np.sum(np.log(degrees / scale))
    if log_sum <= 0:
        raise ValueError(
            "Power-law exponent is undefined: every degree equals x_min")

    return float(1 + len(degrees) / log_sum)


def powerlaw_log_likelihood(alpha: float, degrees, x_min: int = c.DEFAULT_X_MIN,
                            corrected: bool = True) -> float:
    """Continuous power-law log-likelihood maximized by powerlaw_mle."""
    degrees = np.asarray(degrees, dtype=float)
    scale = x_min - 0.5 if corrected else x_min
    return float(len(degrees) * np.log((alpha - 1) / scale) -
                 alpha * np.sum(np.log(degrees / scale)))


def fitted_pmf(support, alpha: float, x_min: int = c.DEFAULT_X_MIN
               ) -> np.ndarray:
    """Discrete power-law pmf d**-alpha / zeta(alpha, x_min)."""
    if alpha <= 1:
        raise ValueError(f"A power-law pmf needs alpha > 1, got {alpha}")

    support = np.asarray(support, dtype=float)
    return support ** -alpha / zeta(alpha, x_min)


def powerlaw_summary(
        distributions: Dict[Tuple[str, str], DegreeDistribution]
) -> pd.DataFrame:
    """One row per (period, method) network with its exponent estimates."""
    rows = []
    for (period, method), distribution in distributions.items():
        rows.append({
            'period': period,
            'method': method,
            'nodes': len(distribution.degrees),
            'max_degree': int(distribution.degrees.max()),
            'hubs': len(distribution.hubs),
            'alpha_hat': distribution.alpha_hat,
            'alpha_hat_uncorrected': distribution.alpha_hat_uncorrected,
        })

    return pd.DataFrame(rows, columns=[
        'period', 'method', 'nodes', 'max_degree', 'hubs', 'alpha_hat',
        'alpha_hat_uncorrected'])
