from typing import Dict

import pandas as pd

from pystocknet import constants as c
from pystocknet.rmt.spectrum import SpectrumReport


def top_eigenvector_components(report: SpectrumReport, n_top: int,
                               sectors: Dict[str, str]) -> pd.DataFrame:
    """Components of the n_top leading eigenvectors per symbol.

    Returns
    -------
    pd.DataFrame
        Columns symbol, sector, ev1 ... ev<n_top>, sorted by sector and then
        by symbol order within the report.

    Raises
    ------
    ValueError
        If n_top exceeds the number of symbols.

    """
    k = len(report.symbols)
    if not 1 <= n_top <= k:
        raise ValueError(f"n_top must be in [1, {k}], got {n_top}")

    table = pd.DataFrame({
        'symbol': report.symbols,
        'sector': [sectors.get(symbol, c.UNKNOWN_SECTOR)
                   for symbol in report.symbols],
    })
    for rank in range(n_top):
        table[f'ev{rank + 1}'] = report.eigenvectors[:, rank]

    return table.sort_values('sector', kind='mergesort').reset_index(drop=True)
