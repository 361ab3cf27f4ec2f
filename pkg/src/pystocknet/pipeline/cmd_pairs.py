import logging
from pathlib import Path
from typing import Dict, Optional

import numpy as np
import pandas as pd

from pystocknet import constants as c
from pystocknet.infostats.correlation import correlation_distribution_summary
from pystocknet.infostats.pair_matrix import PairMatrix
from pystocknet.infostats.pair_sweep import pair_sweep
from pystocknet.output_writer import OutputWriter, read_csv_output
from pystocknet.pipeline.period_panels import load_period_panels
from pystocknet.settings_pystocknet import PystocknetSettings

logger = logging.getLogger(__name__)


def cmd_pairs(settings: PystocknetSettings,
              period: Optional[str] = None) -> Dict[str, PairMatrix]:
    """Pairwise correlation and mutual information for every period.

    Writes pairs/<period>/ with one square table per field (rho, mi, nmi,
    d_corr, d_mi, p_value), the NMI/rho scatter and the correlation
    summary.

    Returns
    -------
    Dict[str, PairMatrix]
        Pair statistics by period.

    """
    writer = OutputWriter(settings)
    results = {}

    for panel in load_period_panels(settings, period):
        pairs = pair_sweep(panel, settings.estimator, settings.seed,
                           period=panel.period)

        period_dir = Path(c.DIR_PAIRS) / panel.period
        for name in c.PAIR_MATRIX_FIELDS:
            writer.write_csv(period_dir / f"{name}.csv", pairs.frame(name),
                             index=True, header_lines={'period': panel.period})

        writer.write_csv(period_dir / c.FILE_SCATTER, pairs.scatter_frame(),
                         header_lines={'period': panel.period})
        summary = correlation_distribution_summary(pairs)
        writer.write_csv(period_dir / c.FILE_RHO_SUMMARY,
                         pd.DataFrame([summary]),
                         header_lines={'period': panel.period})

        significant = int(np.sum(np.triu(pairs.mi, k=1) > 0))
        logger.info(f"Period {panel.period!r}: {significant} of "
                    f"{pairs.n_pairs} pairs with significant mutual "
                    "information")
        results[panel.period] = pairs

    writer.write_manifest()
    return results


def read_pair_matrix(output_dir, period: str) -> PairMatrix:
    """Rebuild the pair statistics written by cmd_pairs for one period."""
    period_dir = Path(output_dir) / c.DIR_PAIRS / period

    frames = {}
    for name in c.PAIR_MATRIX_FIELDS:
        path = period_dir / f"{name}.csv"
        if not path.exists():
            raise FileNotFoundError(
                f"Missing pair statistics {path}, run the pairs stage first")
        frame = read_csv_output(path, index_col=0)
        frame.index = frame.index.astype(str)
        frame.columns = [str(column) for column in frame.columns]
        frames[name] = frame

    return PairMatrix.from_frames(frames)
