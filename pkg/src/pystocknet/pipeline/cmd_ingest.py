import logging
from pathlib import Path
from typing import List

import pandas as pd

from pystocknet import constants as c
from pystocknet.ingest.bar_series import build_all_bars
from pystocknet.ingest.panel_io import write_panel
from pystocknet.ingest.parse_ticks import parse_ticks, read_symbol_metadata
from pystocknet.ingest.returns_panel import (
    ReturnsPanel, compute_log_returns, dataset_summary, filter_symbols,
    sector_composition, split_periods, symbols_to_drop)
from pystocknet.output_writer import OutputWriter
from pystocknet.settings_pystocknet import PystocknetSettings

logger = logging.getLogger(__name__)

DROP_REASON_NO_TICKS = 'no_ticks'
DROP_REASON_EMPTY_FRACTION = 'empty_fraction'


def cmd_ingest(settings: PystocknetSettings) -> List[ReturnsPanel]:
    """Ticks to one returns panel file per period plus a drop report.

    Writes panels/returns_<period>.csv with JSON sidecars, drop_report.csv,
    dataset_summary.csv and sector_composition.csv.

    Returns
    -------
    List[ReturnsPanel]
        The filtered panels, in period order.

    """
    logger.info("Start ingesting tick data")
    tick_file = _existing_path(settings.input.tick_file, 'tick_file')

    with open(tick_file, 'rb') as fp:
        ticks = parse_ticks(fp, settings.session, strict=settings.strict)

    if ticks.empty:
        raise ValueError("No ticks inside the trading session")

    sectors = {}
    symbols = sorted(ticks[c.TICK_COLUMN_SYMBOL].unique())
    if settings.input.metadata_file:
        metadata_file = _existing_path(settings.input.metadata_file,
                                       'metadata_file')
        with open(metadata_file, 'rb') as fp:
            sectors = read_symbol_metadata(fp)
        symbols = sorted(set(symbols) | set(sectors))

    bars, missing = build_all_bars(ticks, settings.session, symbols=symbols)
    if not bars:
        raise ValueError("No symbol has ticks on the trading calendar")

    panel = compute_log_returns(bars, settings.session, sectors=sectors)
    panels = split_periods(panel, settings.session)

    max_empty_fraction = settings.session.max_empty_fraction
    drops = symbols_to_drop(panels, max_empty_fraction)
    drops['reason'] = DROP_REASON_EMPTY_FRACTION
    no_ticks = pd.DataFrame({'symbol': missing, 'period': '',
                             'empty_fraction': 1.0,
                             'reason': DROP_REASON_NO_TICKS})
    drops = pd.concat([frame for frame in (no_ticks, drops) if not frame.empty]
                      or [no_ticks], ignore_index=True)

    panels = filter_symbols(panels, max_empty_fraction)

    writer = OutputWriter(settings)
    for period_panel in panels:
        write_panel(writer, period_panel)

    writer.write_csv(Path(c.DIR_PANELS) / c.FILE_DROP_REPORT, drops)
    writer.write_csv(Path(c.DIR_PANELS) / c.FILE_DATASET_SUMMARY,
                     dataset_summary(panels))
    writer.write_csv(Path(c.DIR_PANELS) / c.FILE_SECTOR_COMPOSITION,
                     sector_composition(panels[0]))
    writer.write_manifest()

    logger.info(f"Ingested {len(panels)} periods, {panels[0].n_symbols} "
                f"symbols kept, {len(drops)} dropped")

    return panels


def _existing_path(path, key: str) -> Path:
    if not path:
        raise ValueError(f"Input setting {key!r} is not configured")

    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(f"Configured {key} {path} does not exist")

    return path
