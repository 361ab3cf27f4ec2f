import logging
from decimal import Decimal
from typing import Iterable, Optional, Tuple

import numpy as np
import pandas as pd

from pystocknet import constants as c
from pystocknet.ingest.tick_record import tick_frame_to_csv
from pystocknet.random_streams import derive_rng
from pystocknet.synth.generate_returns import STREAM_SYNTH, generate_returns
from pystocknet.synth.market_spec import MarketSpec

logger = logging.getLogger(__name__)

MAX_SYNTH_VOLUME = 1000


def synthetic_prices(spec: MarketSpec,
                     price_scale: Optional[float] = None) -> np.ndarray:
    """Window prices implied by generate_returns, (days * W) x k.

    Every symbol opens at price_scale (default spec.price_scale) and the
    path continues across days, so the first window of a day repeats the
    last price of the day before.

    """
    returns = generate_returns(spec).matrix
    windows = spec.windows_per_day
    daily = returns.reshape(spec.days, windows - 1, spec.n_symbols)

    log_prices = np.empty((spec.days, windows, spec.n_symbols))
    if price_scale is None:
        price_scale = spec.price_scale
    level = np.full(spec.n_symbols, np.log(price_scale))
    for day in range(spec.days):
        log_prices[day, 0] = level
        log_prices[day, 1:] = level + np.cumsum(daily[day], axis=0)
        level = log_prices[day, -1]

    return np.exp(log_prices).reshape(-1, spec.n_symbols)


def generate_ticks(
        spec: MarketSpec,
        price_scale: Optional[float] = None,
        skip_windows: Optional[Iterable[Tuple[str, int]]] = None) -> bytes:
    """Tick CSV whose ingestion reproduces generate_returns(spec).

    Every window gets one trade, stamped at the window midpoint, at the
    implied price rounded to 10 decimals.

    Parameters
    ----------
    spec : MarketSpec
    price_scale : float, optional
        Opening price, overrides spec.price_scale.
    skip_windows : Iterable[Tuple[str, int]], optional
        (symbol, window number) pairs to leave without a trade; window
        numbers run over the whole calendar, day after day. Windows are
        also left out at random with probability spec.drop_probability.

    Returns
    -------
    bytes
        UTF-8 tick CSV, ordered by timestamp and then symbol.

    """
    prices = synthetic_prices(spec, price_scale)
    n_windows, n_symbols = prices.shape
    symbols = spec.symbols

    keep = np.ones((n_windows, n_symbols), dtype=bool)
    if spec.drop_probability > 0:
        keep &= derive_rng(spec.seed, STREAM_SYNTH, 'drop').random(
            (n_windows, n_symbols)) >= spec.drop_probability
    column = {symbol: position for position, symbol in enumerate(symbols)}
    for symbol, window in skip_windows or []:
        keep[window, column[symbol]] = False

    window_starts = pd.DatetimeIndex(np.concatenate(
        [spec.session.window_starts(day) for day in spec.trading_days]))
    stamps = window_starts + pd.Timedelta(seconds=spec.session.bar_width // 2)

    volumes = derive_rng(spec.seed, STREAM_SYNTH, 'volume').integers(
        1, MAX_SYNTH_VOLUME + 1, size=(n_windows, n_symbols))

    rows, cols = np.nonzero(keep)
    quantum = Decimal(1).scaleb(-c.SYNTH_PRICE_DECIMALS)
    ticks = pd.DataFrame({
        c.TICK_COLUMN_TIMESTAMP: stamps[rows],
        c.TICK_COLUMN_SYMBOL: np.asarray(symbols, dtype=object)[cols],
        c.TICK_COLUMN_PRICE: [
            Decimal(repr(float(price))).quantize(quantum)
            for price in prices[rows, cols]],
        c.TICK_COLUMN_VOLUME: volumes[rows, cols],
    })

    logger.info(f"Generated {len(ticks)} synthetic ticks, "
                f"{keep.size - len(ticks)} windows left without a trade")

    return tick_frame_to_csv(ticks)


def generate_metadata(spec: MarketSpec) -> bytes:
    """Symbol metadata CSV (symbol,sector) of a market spec."""
    frame = pd.DataFrame({
        c.METADATA_COLUMN_SYMBOL: spec.symbols,
        c.METADATA_COLUMN_SECTOR: [spec.sector_of_symbol[symbol]
                                   for symbol in spec.symbols],
    })
    return frame.to_csv(index=False, lineterminator='\n').encode('utf-8')
