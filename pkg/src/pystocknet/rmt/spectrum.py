import logging
from dataclasses import dataclass
from typing import Any, Dict, List, NamedTuple, Optional

import numpy as np
import pandas as pd

from pystocknet import constants as c
from pystocknet.rmt.marchenko_pastur import MPParams, mp_bounds, mp_probability

logger = logging.getLogger(__name__)


class Eigensystem(NamedTuple):
    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


class SpectrumFractions(NamedTuple):
    frac_within: float
    frac_above: float
    frac_below: float


def orient_vectors(vectors: np.ndarray) -> np.ndarray:
    """Flip columns so that their largest-magnitude entry is positive.

    Ties in magnitude go to the lowest index.

    """
    vectors = np.array(vectors, dtype=float, copy=True)
    if vectors.ndim == 1:
        return orient_vectors(vectors[:, np.newaxis])[:, 0]

    pivots = np.argmax(np.abs(vectors), axis=0)
    signs = np.sign(vectors[pivots, np.arange(vectors.shape[1])])
    signs[signs == 0] = 1.0
    return vectors * signs


def eigen_decompose(matrix) -> Eigensystem:
    """Eigen-decomposition of a symmetric matrix.

    Parameters
    ----------
    matrix : array_like
        Symmetric k x k matrix (within 1e-12).

    Returns
    -------
    Eigensystem
        Eigenvalues in descending order; orthonormal eigenvectors as
        columns, each with its largest-magnitude component positive.
        Eigenvalues in [-1e-10, 0) are set to 0.

    Raises
    ------
    ValueError
        If the matrix is not square and symmetric.

    """
    matrix = np.asarray(matrix, dtype=float)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        raise ValueError(f"Expected a square matrix, got {matrix.shape}")
    if np.max(np.abs(matrix - matrix.T), initial=0) > c.TOL_SYMMETRY:
        raise ValueError("Matrix is not symmetric")

    eigenvalues, eigenvectors = np.linalg.eigh(matrix)
    order = np.argsort(-eigenvalues, kind='stable')
    eigenvalues = eigenvalues[order]
    eigenvectors = eigenvectors[:, order]

    artifacts = (eigenvalues < 0) & (eigenvalues >= -c.TOL_NEGATIVE_EIGENVALUE)
    eigenvalues[artifacts] = 0.0

    return Eigensystem(eigenvalues=eigenvalues,
                       eigenvectors=orient_vectors(eigenvectors))


def classify_spectrum(eigenvalues, mp: MPParams) -> SpectrumFractions:
    """Fractions of eigenvalues below, inside and above [l-, l+].

    The interval is closed: eigenvalues equal to an edge count as within.

    """
    eigenvalues = np.asarray(eigenvalues, dtype=float)
    n = len(eigenvalues)
    if n == 0:
        raise ValueError("Cannot classify an empty spectrum")

    below = int(np.sum(eigenvalues < mp.lambda_min))
    above = int(np.sum(eigenvalues > mp.lambda_max))

    return SpectrumFractions(frac_within=(n - below - above) / n,
                             frac_above=above / n,
                             frac_below=below / n)


@dataclass
class SpectrumReport:
    """Spectrum of an empirical correlation matrix against the MP law.

    Attributes
    ----------
    period : str
        Analysis period.
    symbols : List[str]
        Row labels of the eigenvectors.
    eigenvalues : np.ndarray
        Descending eigenvalues.
    eigenvectors : np.ndarray
        Orthonormal eigenvectors as columns, in eigenvalue order.
    mp : MPParams
        Bounds for the panel dimensions.
    frac_within, frac_above, frac_below : float
        Fractions of eigenvalues inside, above and below the bounds.

    """

    period: str
    symbols: List[str]
    eigenvalues: np.ndarray
    eigenvectors: np.ndarray
    mp: MPParams
    frac_within: float
    frac_above: float
    frac_below: float

    @property
    def empirical_lambda_max(self) -> float:
        return float(self.eigenvalues[0])

    @property
    def ratio(self) -> float:
        """Largest empirical eigenvalue relative to the MP upper edge."""
        return self.empirical_lambda_max / self.mp.lambda_max

    def to_document(self) -> Dict[str, Any]:
        """JSON-ready form of the report."""
        fractions = {'within': self.frac_within, 'above': self.frac_above,
                     'below': self.frac_below}
        return {
            'period': self.period,
            'q_ratio': self.mp.q_ratio,
            'lambda_min': self.mp.lambda_min,
            'lambda_max': self.mp.lambda_max,
            'empirical_lambda_max': self.empirical_lambda_max,
            'ratio': self.ratio,
            'fractions': fractions,
            'percentages': {key: round(100 * value, c.PERCENT_DECIMALS)
                            for key, value in fractions.items()},
            'eigenvalues': [float(value) for value in self.eigenvalues],
        }


def spectrum_report(rho: np.ndarray, n_observations: int,
                    symbols: List[str], period: str) -> SpectrumReport:
    """Decompose a correlation matrix and classify it against the MP law."""
    mp = mp_bounds(n_observations, len(symbols))
    eigensystem = eigen_decompose(rho)
    fractions = classify_spectrum(eigensystem.eigenvalues, mp)

    logger.info(
        f"Period {period!r}: largest eigenvalue "
        f"{eigensystem.eigenvalues[0]:.4f}, lambda_max {mp.lambda_max:.4f}, "
        f"{100 * fractions.frac_within:.2f}% within bounds")

    return SpectrumReport(
        period=period, symbols=list(symbols),
        eigenvalues=eigensystem.eigenvalues,
        eigenvectors=eigensystem.eigenvectors, mp=mp,
        frac_within=fractions.frac_within,
        frac_above=fractions.frac_above,
        frac_below=fractions.frac_below)


def spectrum_histogram(eigenvalues, mp: MPParams,
                       bins: int = c.DEFAULT_HISTOGRAM_BINS,
                       upper: Optional[float] = None) -> pd.DataFrame:
    """Empirical eigenvalue density next to the bin-averaged MP density.

    Parameters
    ----------
    eigenvalues : array_like
        Eigenvalues, possibly pooled over several matrices.
    mp : MPParams
        Reference law.
    bins : int, optional
        Number of uniform bins, by default 50.
    upper : float, optional
        Right end of the range. By default
        max(largest eigenvalue, lambda_max) * 1.05.

    Returns
    -------
    pd.DataFrame
        Columns bin_left, bin_right, empirical_density and mp_density.

    """
    eigenvalues = np.asarray(eigenvalues, dtype=float)
    if upper is None:
        upper = max(eigenvalues.max(), mp.lambda_max) * \
            c.HISTOGRAM_RANGE_PADDING

    density, edges = np.histogram(eigenvalues, bins=bins, range=(0, upper),
                                  density=True)
    widths = np.diff(edges)
    mp_density = [mp_probability(left, right, mp) / width
                  for left, right, width in zip(edges[:-1], edges[1:], widths)]

    return pd.DataFrame({'bin_left': edges[:-1], 'bin_right': edges[1:],
                         'empirical_density': density,
                         'mp_density': mp_density})
