from dataclasses import dataclass, fields
from typing import List, Optional

import numpy as np
import pandas as pd

from pystocknet import constants as c


@dataclass
class PairMatrix:
    """k x k matrices of pairwise statistics.

    Fields that were not computed are None. Distances have a zero diagonal,
    rho and nmi a unit diagonal.

    Attributes
    ----------
    symbols : List[str]
        Row and column labels.
    rho : np.ndarray
        Pearson correlation.
    mi : np.ndarray
        Accepted mutual information in nats: the estimate if the
        permutation test rejects independence, 0 otherwise.
    raw_mi : np.ndarray
        Mutual information estimate before the significance test.
    nmi : np.ndarray
        Normalized accepted mutual information.
    raw_nmi : np.ndarray
        Normalized raw mutual information, used for the NMI/rho scatter.
    joint_entropy : np.ndarray
        Joint entropy estimate in nats, marginal entropy on the diagonal.
    p_value : np.ndarray
        Permutation test p-value.
    d_corr : np.ndarray
        Correlation distance sqrt(2 (1 - rho)).
    d_mi : np.ndarray
        Mutual information distance 1 - mi / joint_entropy, 1 for pairs
        whose mutual information was zeroed.

    """

    symbols: List[str]
    rho: Optional[np.ndarray] = None
    mi: Optional[np.ndarray] = None
    raw_mi: Optional[np.ndarray] = None
    nmi: Optional[np.ndarray] = None
    raw_nmi: Optional[np.ndarray] = None
    joint_entropy: Optional[np.ndarray] = None
    p_value: Optional[np.ndarray] = None
    d_corr: Optional[np.ndarray] = None
    d_mi: Optional[np.ndarray] = None

    def __post_init__(self):
        self.symbols = list(self.symbols)
        size = len(self.symbols)

        for name in self.matrix_fields:
            value = getattr(self, name)
            if value is None:
                continue
            value = np.asarray(value, dtype=float)
            if value.shape != (size, size):
                raise ValueError(
                    f"{name} has shape {value.shape}, expected "
                    f"({size}, {size})")
            if np.max(np.abs(value - value.T), initial=0) > c.TOL_SYMMETRY:
                raise ValueError(f"{name} is not symmetric")
            setattr(self, name, value)

    @property
    def matrix_fields(self) -> List[str]:
        return [f.name for f in fields(self) if f.name != 'symbols']

    @property
    def n_pairs(self) -> int:
        return len(self.symbols) * (len(self.symbols) - 1) // 2

    def frame(self, name: str) -> pd.DataFrame:
        """One field as a square table labelled with the symbols."""
        value = getattr(self, name)
        if value is None:
            raise ValueError(f"Field {name!r} has not been computed")

        return pd.DataFrame(value, index=pd.Index(self.symbols, name='symbol'),
                            columns=self.symbols)

    def distance(self, method: str) -> np.ndarray:
        """Distance matrix feeding the spanning tree of a method."""
        if method == c.METHOD_CORRELATION:
            value = self.d_corr
        elif method == c.METHOD_MUTUAL_INFORMATION:
            value = self.d_mi
        else:
            raise ValueError(
                f"Unknown method {method!r}. Choose from "
                f"{', '.join(c.VALID_METHODS)}")

        if value is None:
            raise ValueError(f"Distances for method {method!r} are missing")

        return value

    def scatter_frame(self) -> pd.DataFrame:
        """symbol_i, symbol_j, rho and nmi of every pair i < j."""
        rows, cols = np.triu_indices(len(self.symbols), k=1)
        nmi = self.raw_nmi if self.raw_nmi is not None else self.nmi
        symbols = np.asarray(self.symbols, dtype=object)

        return pd.DataFrame({
            'symbol_i': symbols[rows],
            'symbol_j': symbols[cols],
            'rho': self.rho[rows, cols],
            'nmi': nmi[rows, cols],
        })

    @classmethod
    def from_frames(cls, frames: dict) -> 'PairMatrix':
        """Rebuild from square tables keyed by field name."""
        symbols = [str(symbol) for symbol in next(iter(frames.values())).index]
        return cls(symbols=symbols, **{
            name: frame.loc[:, :].to_numpy(dtype=float)
            for name, frame in frames.items()})
