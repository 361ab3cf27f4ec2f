import datetime
import logging
from collections import defaultdict
from dataclasses import dataclass, field
from decimal import Decimal, localcontext
from typing import Dict, List, Optional, Tuple

import numpy as np
import pandas as pd
from tqdm import tqdm

from pystocknet import constants as c
from pystocknet.settings_pystocknet import SessionSettings

logger = logging.getLogger(__name__)

# working precision for exact notional sums
VWAP_DECIMAL_PRECISION = 50


@dataclass
class BarSeries:
    """Fixed-width VWAP bars of one symbol.

    Attributes
    ----------
    symbol : str
        Instrument identifier.
    bars : pd.DataFrame
        One row per window with columns window_start, vwap and filled. The
        filled flag marks windows without trades, whose vwap was carried
        over from a neighbouring window.
    empty_days : List[datetime.date]
        Trading days on which the symbol had no trade at all.

    """

    symbol: str
    bars: pd.DataFrame
    empty_days: List[datetime.date] = field(default_factory=list)

    def __post_init__(self):
        if (self.bars[c.BAR_COLUMN_VWAP] <= 0).any():
            raise ValueError(f"Non-positive VWAP in bars of {self.symbol}")

    @property
    def window_starts(self) -> pd.DatetimeIndex:
        return pd.DatetimeIndex(self.bars[c.BAR_COLUMN_WINDOW_START])

    def filled_counts(self, windows_per_day: int) -> np.ndarray:
        """Number of filled windows on each trading day."""
        filled = self.bars[c.BAR_COLUMN_FILLED].to_numpy()
        return filled.reshape(-1, windows_per_day).sum(axis=1)


def build_vwap_bars(
        ticks: pd.DataFrame,
        config: SessionSettings,
        trading_days: Optional[List[datetime.date]] = None) -> BarSeries:
    """Aggregate the ticks of one symbol to VWAP bars.

    For every window t, vwap = sum(v_i * S_i) / sum(v_i) over the ticks in
    [t, t + bar_width). Notional and volume sums are exact decimal sums, the
    vwap is converted to float once per window.

    Windows without trades take the vwap of the previous window and are
    flagged as filled. Leading empty windows of a day take the vwap of the
    first trade of that day. A day without any trade is carried over from
    the previous day (or from the first traded day if it is a leading day)
    and reported in BarSeries.empty_days.

    Parameters
    ----------
    ticks : pd.DataFrame
        Tick table of a single symbol, as returned by parse_ticks.
    config : SessionSettings
        Session definition.
    trading_days : List[datetime.date], optional
        Trading day calendar. Defaults to config.trading_days, or the days
        present in ticks if neither is given.

    Returns
    -------
    BarSeries
        Exactly windows_per_day bars per trading day.

    Raises
    ------
    ValueError
        If ticks holds more than one symbol or no ticks on the calendar.

    """
    symbols = ticks[c.TICK_COLUMN_SYMBOL].unique()
    if len(symbols) != 1:
        raise ValueError(
            f"build_vwap_bars expects ticks of one symbol, got {len(symbols)}")
    symbol = symbols[0]

    days = _resolve_trading_days(ticks, config, trading_days)
    windows_per_day = config.windows_per_day

    slots = _window_slots(ticks, config, days)
    on_grid = slots >= 0
    if not on_grid.any():
        raise ValueError(f"No ticks on the trading calendar for {symbol}")

    vwap = np.full(len(days) * windows_per_day, np.nan)
    for slot, value in _exact_vwap(
            slots[on_grid],
            ticks[c.TICK_COLUMN_PRICE].to_numpy()[on_grid],
            ticks[c.TICK_COLUMN_VOLUME].to_numpy()[on_grid]).items():
        vwap[slot] = value

    grid = pd.DataFrame(vwap.reshape(len(days), windows_per_day))
    filled = grid.isna()
    empty_days = [day for day, empty in zip(days, filled.all(axis=1))
                  if empty]

    # leading empty windows of a traded day take that day's first trade
    before_first_trade = grid.ffill(axis=1).isna()
    grid = grid.where(~before_first_trade, grid.bfill(axis=1))

    flat = pd.Series(grid.to_numpy().ravel()).ffill().bfill()

    for day in empty_days:
        logger.warning(f"{symbol}: no trades on {day}, day is carried over")

    window_starts = pd.DatetimeIndex(
        np.concatenate([config.window_starts(day) for day in days]))
    bars = pd.DataFrame({
        c.BAR_COLUMN_WINDOW_START: window_starts,
        c.BAR_COLUMN_VWAP: flat.to_numpy(),
        c.BAR_COLUMN_FILLED: filled.to_numpy().ravel(),
    })

    return BarSeries(symbol=symbol, bars=bars, empty_days=empty_days)


def build_all_bars(
        ticks: pd.DataFrame,
        config: SessionSettings,
        symbols: Optional[List[str]] = None,
        trading_days: Optional[List[datetime.date]] = None
) -> Tuple[List[BarSeries], List[str]]:
    """Build VWAP bars for every symbol of a tick table.

    Parameters
    ----------
    ticks : pd.DataFrame
        Tick table of any number of symbols.
    config : SessionSettings
        Session definition.
    symbols : List[str], optional
        Symbols to build, e.g. every symbol listed in the metadata file. By
        default the symbols present in ticks.
    trading_days : List[datetime.date], optional
        Shared calendar, see build_vwap_bars.

    Returns
    -------
    Tuple[List[BarSeries], List[str]]
        Bars of every symbol with ticks on the calendar (sorted by symbol),
        and the symbols without any such tick.

    """
    days = _resolve_trading_days(ticks, config, trading_days)

    if symbols is None:
        symbols = ticks[c.TICK_COLUMN_SYMBOL].unique().tolist()

    grouped = dict(tuple(ticks.groupby(c.TICK_COLUMN_SYMBOL, sort=True)))

    series, missing = [], []
    for symbol in tqdm(sorted(symbols), desc='Building VWAP bars',
                       leave=False):
        symbol_ticks = grouped.get(symbol)
        if symbol_ticks is None:
            missing.append(symbol)
            continue
        try:
            series.append(build_vwap_bars(symbol_ticks, config, days))
        except ValueError:
            missing.append(symbol)

    for symbol in missing:
        logger.warning(f"{symbol}: no ticks in the session calendar")

    return series, missing


def _resolve_trading_days(
        ticks: pd.DataFrame, config: SessionSettings,
        trading_days: Optional[List[datetime.date]]) -> List[datetime.date]:
    if trading_days:
        return list(trading_days)

    if config.trading_days:
        return list(config.trading_days)

    return sorted(set(ticks[c.TICK_COLUMN_TIMESTAMP].dt.date))


def _window_slots(ticks: pd.DataFrame, config: SessionSettings,
                  days: List[datetime.date]) -> np.ndarray:
    """Position of every tick on the flattened (day, window) grid, -1 if off
    the grid."""
    timestamps = ticks[c.TICK_COLUMN_TIMESTAMP]
    day_position = {day: position for position, day in enumerate(days)}

    day_slots = timestamps.dt.date.map(day_position).fillna(-1) \
        .astype('int64').to_numpy()

    open_time = pd.Timedelta(hours=config.session_open.hour,
                             minutes=config.session_open.minute,
                             seconds=config.session_open.second)
    seconds = (timestamps - timestamps.dt.normalize() - open_time) \
        .dt.total_seconds().to_numpy()
    window = np.floor_divide(seconds, config.bar_width).astype('int64')

    valid = (day_slots >= 0) & (window >= 0) & \
        (window < config.windows_per_day)

    return np.where(valid, day_slots * config.windows_per_day + window, -1)


def _exact_vwap(slots: np.ndarray, prices: np.ndarray,
                volumes: np.ndarray) -> Dict[int, float]:
    notional: Dict[int, Decimal] = defaultdict(Decimal)
    volume: Dict[int, int] = defaultdict(int)

    with localcontext() as ctx:
        ctx.prec = VWAP_DECIMAL_PRECISION
        for slot, price, vol in zip(slots, prices, volumes):
            notional[int(slot)] += Decimal(price) * int(vol)
            volume[int(slot)] += int(vol)

        return {slot: float(notional[slot] / volume[slot])
                for slot in notional}
