import datetime
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional

import numpy as np
import pandas as pd

from pystocknet import constants as c
from pystocknet.ingest.bar_series import BarSeries
from pystocknet.settings_pystocknet import SessionSettings

logger = logging.getLogger(__name__)


@dataclass
class ReturnsPanel:
    """Per-window log returns of k symbols over one analysis period.

    Attributes
    ----------
    returns : pd.DataFrame
        m x k log returns. The index holds the start of the later window of
        each return pair, the columns are the symbols.
    sectors : Dict[str, str]
        Sector label of every symbol.
    period : str
        Name of the analysis period.
    windows_per_day : int
        Number of bars per trading day W; every day contributes W - 1 rows.
    filled_counts : pd.DataFrame
        Number of filled (trade-less) windows per trading day (index) and
        symbol (columns). Its index is the panel's trading day calendar.

    """

    returns: pd.DataFrame
    sectors: Dict[str, str]
    period: str
    windows_per_day: int
    filled_counts: pd.DataFrame = field(default=None)

    def __post_init__(self):
        self.returns.index.name = c.PANEL_INDEX_NAME

        if self.filled_counts is None:
            days = sorted(set(self.returns.index.date))
            self.filled_counts = pd.DataFrame(
                0, index=days, columns=self.returns.columns)

        n_days = len(self.filled_counts)
        expected_rows = n_days * (self.windows_per_day - 1)
        if len(self.returns) != expected_rows:
            raise ValueError(
                f"Panel {self.period!r} has {len(self.returns)} rows, "
                f"expected {n_days} days x {self.windows_per_day - 1} = "
                f"{expected_rows}")

        if not np.isfinite(self.returns.to_numpy()).all():
            raise ValueError(f"Panel {self.period!r} has non-finite returns")

        for symbol in self.symbols:
            self.sectors.setdefault(symbol, c.UNKNOWN_SECTOR)
        self.sectors = {symbol: self.sectors[symbol]
                        for symbol in self.symbols}

    @property
    def symbols(self) -> List[str]:
        return list(self.returns.columns)

    @property
    def days(self) -> List[datetime.date]:
        return list(self.filled_counts.index)

    @property
    def day_index(self) -> pd.Series:
        """Trading day of every return row."""
        return pd.Series(self.returns.index.date, index=self.returns.index)

    @property
    def matrix(self) -> np.ndarray:
        """The m x k return matrix."""
        return self.returns.to_numpy(dtype=float)

    @property
    def n_observations(self) -> int:
        return len(self.returns)

    @property
    def n_symbols(self) -> int:
        return self.returns.shape[1]

    def select_symbols(self, symbols: List[str]) -> 'ReturnsPanel':
        """Panel restricted to the given symbols, in the given order."""
        return ReturnsPanel(
            returns=self.returns[symbols].copy(),
            sectors={symbol: self.sectors[symbol] for symbol in symbols},
            period=self.period,
            windows_per_day=self.windows_per_day,
            filled_counts=self.filled_counts[symbols].copy())

    def select_days(self, days: List[datetime.date],
                    period: Optional[str] = None) -> 'ReturnsPanel':
        """Panel restricted to the given trading days, rows kept in order."""
        wanted = set(days)
        days = [day for day in self.days if day in wanted]
        rows = pd.Index(self.returns.index.date).isin(days)

        return ReturnsPanel(
            returns=self.returns[rows].copy(),
            sectors=dict(self.sectors),
            period=self.period if period is None else period,
            windows_per_day=self.windows_per_day,
            filled_counts=self.filled_counts.loc[days].copy())

    def empty_fraction(self) -> pd.Series:
        """Fraction of filled windows per symbol over the whole panel."""
        n_windows = len(self.filled_counts) * self.windows_per_day
        if n_windows == 0:
            return pd.Series(0.0, index=self.returns.columns)

        return self.filled_counts.sum(axis=0) / n_windows


def compute_log_returns(
        bars: List[BarSeries],
        config: SessionSettings,
        sectors: Optional[Dict[str, str]] = None,
        period: str = c.DEFAULT_PERIOD_NAME) -> ReturnsPanel:
    """Log returns between consecutive windows of the same trading day.

    R_t = ln(S_{t+1}) - ln(S_t). Returns never cross a day boundary, so a
    day of W windows yields W - 1 returns.

    Parameters
    ----------
    bars : List[BarSeries]
        Bars of every symbol, on one shared window grid.
    config : SessionSettings
        Session definition, provides the number of windows per day.
    sectors : Dict[str, str], optional
        Sector label per symbol. Symbols without a label get "UNKNOWN".
    period : str, optional
        Period name of the resulting panel, by default "all".

    Returns
    -------
    ReturnsPanel

    Raises
    ------
    ValueError
        If no bars are given or the window grids differ between symbols.

    """
    if not bars:
        raise ValueError("No bar series to compute returns from")

    reference = bars[0].window_starts
    for series in bars[1:]:
        if not series.window_starts.equals(reference):
            raise ValueError(
                f"Window grid of {series.symbol} differs from the grid of "
                f"{bars[0].symbol}")

    windows_per_day = config.windows_per_day
    n_days = len(reference) // windows_per_day
    symbols = [series.symbol for series in bars]

    prices = np.column_stack(
        [series.bars[c.BAR_COLUMN_VWAP].to_numpy(dtype=float)
         for series in bars])
    log_prices = np.log(prices).reshape(n_days, windows_per_day, len(bars))
    returns = np.diff(log_prices, axis=1).reshape(-1, len(bars))

    labels = reference.to_numpy().reshape(n_days, windows_per_day)[:, 1:]
    index = pd.DatetimeIndex(labels.ravel(), name=c.PANEL_INDEX_NAME)

    days = list(reference.to_numpy().reshape(
        n_days, windows_per_day)[:, 0].astype('datetime64[D]').tolist())
    filled_counts = pd.DataFrame(
        np.column_stack([series.filled_counts(windows_per_day)
                         for series in bars]),
        index=days, columns=symbols)

    logger.info(f"Computed {returns.shape[0]} returns for "
                f"{len(symbols)} symbols over {n_days} days")

    return ReturnsPanel(
        returns=pd.DataFrame(returns, index=index, columns=symbols),
        sectors=dict(sectors or {}),
        period=period,
        windows_per_day=windows_per_day,
        filled_counts=filled_counts)


def split_periods(panel: ReturnsPanel,
                  config: SessionSettings) -> List[ReturnsPanel]:
    """Split a panel into one panel per configured analysis period.

    Without configured periods a single period named "all" covers every
    trading day of the panel.

    Raises
    ------
    ValueError
        If a trading day of the panel is covered by no period.

    """
    if not panel.days:
        raise ValueError("Cannot split a panel without trading days")

    periods = config.periods_or_default(panel.days)

    uncovered = [day for day in panel.days
                 if not any(period.contains(day) for period in periods)]
    if uncovered:
        raise ValueError(
            f"{len(uncovered)} trading days are not covered by any period, "
            f"first one is {uncovered[0]}")

    panels = []
    for period in periods:
        days = [day for day in panel.days if period.contains(day)]
        if not days:
            logger.warning(f"Period {period.name!r} holds no trading days")
        panels.append(panel.select_days(days, period=period.name))
        logger.debug(f"Period {period.name!r}: {len(days)} trading days")

    return panels


def symbols_to_drop(panels: List[ReturnsPanel],
                    max_empty_fraction: float) -> pd.DataFrame:
    """Symbols whose filled fraction exceeds the threshold in some period.

    Returns
    -------
    pd.DataFrame
        Columns symbol, period and empty_fraction, one row per symbol, the
        period being the first one in which the threshold is exceeded.

    """
    if not 0 <= max_empty_fraction <= 1:
        raise ValueError(
            f"max_empty_fraction must be in [0, 1], got {max_empty_fraction}")

    rows = {}
    for panel in panels:
        fractions = panel.empty_fraction()
        for symbol, fraction in fractions[fractions > max_empty_fraction] \
                .items():
            rows.setdefault(symbol, (symbol, panel.period, float(fraction)))

    return pd.DataFrame(list(rows.values()),
                        columns=['symbol', 'period', 'empty_fraction'])


def filter_symbols(panels: List[ReturnsPanel],
                   max_empty_fraction: float) -> List[ReturnsPanel]:
    """Drop, from every period, the symbols with too many filled windows.

    A symbol whose fraction of filled windows exceeds max_empty_fraction in
    any period is removed from all periods, so the surviving symbol set is
    identical across the returned panels.

    Raises
    ------
    ValueError
        If every symbol is dropped.

    """
    dropped = set(symbols_to_drop(panels, max_empty_fraction)['symbol'])

    survivors = [symbol for symbol in panels[0].symbols
                 if symbol not in dropped]
    if not survivors:
        raise ValueError(
            f"All symbols exceed max_empty_fraction={max_empty_fraction}")

    if dropped:
        logger.info(f"Dropping {len(dropped)} symbols with insufficient "
                    f"data: {', '.join(sorted(dropped))}")

    return [panel.select_symbols(survivors) for panel in panels]


def dataset_summary(panels: List[ReturnsPanel]) -> pd.DataFrame:
    """Trading days, symbol count and observation count per period."""
    return pd.DataFrame([{
        'period': panel.period,
        'start': str(panel.days[0]) if panel.days else '',
        'end': str(panel.days[-1]) if panel.days else '',
        'trading_days': len(panel.days),
        'symbols': panel.n_symbols,
        'observations': panel.n_observations,
    } for panel in panels])


def sector_composition(panel: ReturnsPanel) -> pd.DataFrame:
    """Number of symbols per sector, sorted by sector name."""
    counts = pd.Series(panel.sectors).value_counts().sort_index()
    return pd.DataFrame({'sector': counts.index,
                         'symbols': counts.to_numpy()})
