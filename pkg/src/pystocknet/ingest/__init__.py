from .tick_record import TickRecord, records_to_frame, format_tick_csv
from .parse_ticks import TickParseError, parse_ticks, read_symbol_metadata
from .bar_series import BarSeries, build_vwap_bars, build_all_bars
from .returns_panel import (
    ReturnsPanel, compute_log_returns, dataset_summary, filter_symbols,
    sector_composition, split_periods, symbols_to_drop)
from .panel_io import find_panels, read_panel, write_panel
