import datetime
import json
import logging
from pathlib import Path
from typing import List, Union

import pandas as pd

from pystocknet import constants as c
from pystocknet.ingest.returns_panel import ReturnsPanel
from pystocknet.output_writer import OutputWriter, read_csv_output

logger = logging.getLogger(__name__)

KEY_SIDECAR_PERIOD = 'period'
KEY_SIDECAR_WINDOWS_PER_DAY = 'windows_per_day'
KEY_SIDECAR_DAYS = 'trading_days'
KEY_SIDECAR_SECTORS = 'sectors'
KEY_SIDECAR_FILLED_COUNTS = 'filled_counts'
KEY_SIDECAR_ROWS = 'rows'


def panel_file_name(period: str, suffix: str = '.csv') -> str:
    return f"{c.FILE_RETURNS_PREFIX}{period}{suffix}"


def write_panel(writer: OutputWriter, panel: ReturnsPanel) -> Path:
    """Write a panel as CSV (window, symbol columns) plus a JSON sidecar.

    The sidecar holds the period metadata needed to re-read the panel:
    window count per day, trading days, sector labels and filled-window
    counts.

    """
    csv_path = writer.write_csv(
        Path(c.DIR_PANELS) / panel_file_name(panel.period),
        panel.returns, index=True,
        header_lines={KEY_SIDECAR_PERIOD: panel.period})

    writer.write_json(
        Path(c.DIR_PANELS) / panel_file_name(panel.period, '.json'), {
            KEY_SIDECAR_PERIOD: panel.period,
            KEY_SIDECAR_WINDOWS_PER_DAY: panel.windows_per_day,
            KEY_SIDECAR_ROWS: panel.n_observations,
            KEY_SIDECAR_DAYS: [str(day) for day in panel.days],
            KEY_SIDECAR_SECTORS: panel.sectors,
            KEY_SIDECAR_FILLED_COUNTS: {
                symbol: [int(count) for count in panel.filled_counts[symbol]]
                for symbol in panel.symbols},
        })

    logger.debug(f"Wrote panel {panel.period!r}: {panel.n_observations} x "
                 f"{panel.n_symbols}")
    return csv_path


def read_panel(csv_path: Union[str, Path]) -> ReturnsPanel:
    """Read a panel written by write_panel."""
    csv_path = Path(csv_path)
    sidecar_path = csv_path.with_suffix('.json')

    if not csv_path.exists():
        raise FileNotFoundError(f"Returns panel {csv_path} does not exist")

    with open(sidecar_path, 'r') as fp:
        sidecar = json.load(fp)

    returns = read_csv_output(csv_path, index_col=0, parse_dates=[0])
    returns.columns = [str(column) for column in returns.columns]
    returns.index = pd.DatetimeIndex(returns.index, name=c.PANEL_INDEX_NAME)

    days = [datetime.date.fromisoformat(day)
            for day in sidecar[KEY_SIDECAR_DAYS]]
    filled_counts = pd.DataFrame(
        sidecar[KEY_SIDECAR_FILLED_COUNTS], index=days,
        columns=list(returns.columns))

    return ReturnsPanel(
        returns=returns.astype(float),
        sectors=dict(sidecar[KEY_SIDECAR_SECTORS]),
        period=sidecar[KEY_SIDECAR_PERIOD],
        windows_per_day=int(sidecar[KEY_SIDECAR_WINDOWS_PER_DAY]),
        filled_counts=filled_counts)


def find_panels(panel_dir: Union[str, Path],
                period: str = None) -> List[Path]:
    """Panel CSV files in a directory, optionally for one period only."""
    panel_dir = Path(panel_dir)
    if period is not None:
        paths = [panel_dir / panel_file_name(period)]
        if not paths[0].exists():
            raise FileNotFoundError(
                f"No returns panel for period {period!r} in {panel_dir}")
        return paths

    paths = sorted(panel_dir.glob(f"{c.FILE_RETURNS_PREFIX}*.csv"))
    if not paths:
        raise FileNotFoundError(f"No returns panels found in {panel_dir}")

    return paths
