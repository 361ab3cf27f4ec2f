import logging
from dataclasses import dataclass
from typing import List

import numpy as np
import pandas as pd
from tqdm import tqdm

from pystocknet import constants as c
from pystocknet.infostats.correlation import correlation_matrix
from pystocknet.random_streams import derive_rng
from pystocknet.rmt.marchenko_pastur import MPParams, mp_bounds
from pystocknet.rmt.spectrum import (
    classify_spectrum, eigen_decompose, spectrum_histogram)

logger = logging.getLogger(__name__)

STREAM_SURROGATE = 'surrogate'


@dataclass
class SurrogateEnsemble:
    """Spectra of column-wise shuffled copies of one panel.

    Attributes
    ----------
    trials : int
        Number of shuffled panels.
    eigenvalues : np.ndarray
        trials x k eigenvalues, one row per trial.
    frac_within : List[float]
        Fraction of eigenvalues inside the MP bounds, per trial.
    mp : MPParams
        Bounds for the panel dimensions.

    """

    trials: int
    eigenvalues: np.ndarray
    frac_within: List[float]
    mp: MPParams

    @property
    def pooled_eigenvalues(self) -> np.ndarray:
        return self.eigenvalues.ravel()

    @property
    def pooled_frac_within(self) -> float:
        return classify_spectrum(self.pooled_eigenvalues, self.mp).frac_within

    def histogram(self, bins: int = c.DEFAULT_HISTOGRAM_BINS) -> pd.DataFrame:
        """Pooled eigenvalue density against the MP density."""
        return spectrum_histogram(self.pooled_eigenvalues, self.mp, bins=bins)


def surrogate_shuffle(panel, seed: int, trial: int = 0):
    """Shuffle every column of a panel independently.

    Column j of trial t is permuted with the generator derived from
    (seed, "surrogate", t, j), so each column keeps its exact multiset of
    returns while the cross-dependence is destroyed.

    Parameters
    ----------
    panel : ReturnsPanel
    seed : int
        Master seed.
    trial : int, optional
        Trial index, by default 0.

    Returns
    -------
    ReturnsPanel
        Same index, symbols and metadata, shuffled values.

    """
    matrix = panel.matrix
    shuffled = np.column_stack([
        derive_rng(seed, STREAM_SURROGATE, trial, column).permutation(
            matrix[:, column])
        for column in range(matrix.shape[1])])

    return type(panel)(
        returns=pd.DataFrame(shuffled, index=panel.returns.index,
                             columns=panel.symbols),
        sectors=dict(panel.sectors),
        period=panel.period,
        windows_per_day=panel.windows_per_day,
        filled_counts=panel.filled_counts.copy())


def surrogate_ensemble(panel, trials: int, seed: int) -> SurrogateEnsemble:
    """Eigenvalue spectra of `trials` independent surrogate shuffles."""
    if trials < 1:
        raise ValueError(f"At least one surrogate trial is needed, got {trials}")

    mp = mp_bounds(panel.n_observations, panel.n_symbols)

    eigenvalues, frac_within = [], []
    for trial in tqdm(range(trials), desc=f'Surrogates {panel.period}',
                      leave=False):
        shuffled = surrogate_shuffle(panel, seed, trial)
        spectrum = eigen_decompose(correlation_matrix(shuffled).rho)
        eigenvalues.append(spectrum.eigenvalues)
        frac_within.append(
            classify_spectrum(spectrum.eigenvalues, mp).frac_within)

    ensemble = SurrogateEnsemble(trials=trials,
                                 eigenvalues=np.vstack(eigenvalues),
                                 frac_within=frac_within, mp=mp)

    logger.info(f"Surrogate ensemble of {trials} trials: "
                f"{100 * ensemble.pooled_frac_within:.2f}% of pooled "
                f"eigenvalues within bounds")

    return ensemble
