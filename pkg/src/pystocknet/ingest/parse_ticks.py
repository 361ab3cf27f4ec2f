import logging
import re
from decimal import Decimal, InvalidOperation
from typing import BinaryIO, Dict, Optional

import numpy as np
import pandas as pd

from pystocknet import constants as c
from pystocknet.settings_pystocknet import SessionSettings

logger = logging.getLogger(__name__)

TIMESTAMP_FORMAT = '%Y-%m-%dT%H:%M:%S'
# header is line 1
FIRST_DATA_LINE = 2


class TickParseError(ValueError):
    """A malformed row in the tick CSV.

    Attributes
    ----------
    line_number : int, optional
        1-based line number of the offending row in the source file.

    """

    def __init__(self, message: str, line_number: Optional[int] = None):
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)
        self.line_number = line_number


def parse_ticks(
        source: BinaryIO,
        config: SessionSettings,
        strict: bool = False) -> pd.DataFrame:
    """Parse a tick CSV into a tick table.

    Rows outside [session_open, session_close), and rows on dates that are
    not configured trading days (when trading days are configured), are
    discarded. The result is grouped per symbol and time ordered.

    Parameters
    ----------
    source : BinaryIO
        UTF-8 CSV byte stream with header timestamp,symbol,price,volume.
    config : SessionSettings
        Session definition used for the time-of-day and calendar filter.
    strict : bool, optional
        If True, the first malformed row raises TickParseError. Otherwise
        malformed rows are logged and skipped, by default False.

    Returns
    -------
    pd.DataFrame
        Columns timestamp (datetime64), symbol (str), price (Decimal) and
        volume (int64), sorted by symbol, then timestamp.
        One row per TickRecord, use tick_record.frame_to_records for the
        record view.

    Raises
    ------
    TickParseError
        On a malformed row in strict mode, or if the file is not a four
        column CSV with the expected header.
    ValueError
        If the input is empty.

    """
    try:
        raw = pd.read_csv(source, dtype=str, keep_default_na=False,
                          index_col=False, encoding='utf-8')
    except pd.errors.EmptyDataError:
        raise ValueError("Tick input is empty") from None
    except pd.errors.ParserError as error:
        raise TickParseError(str(error), _line_from_parser_error(error)) \
            from None

    if list(raw.columns) != c.TICK_COLUMNS:
        raise TickParseError(
            f"Expected header {','.join(c.TICK_COLUMNS)}, got "
            f"{','.join(raw.columns)}", line_number=1)

    if raw.empty:
        raise ValueError("Tick input contains no rows")

    line_numbers = np.arange(len(raw)) + FIRST_DATA_LINE

    timestamps = pd.to_datetime(raw[c.TICK_COLUMN_TIMESTAMP].str.strip(),
                                format=TIMESTAMP_FORMAT, errors='coerce')
    symbols = raw[c.TICK_COLUMN_SYMBOL].str.strip()
    prices = raw[c.TICK_COLUMN_PRICE].str.strip().map(_to_decimal)
    volume_text = raw[c.TICK_COLUMN_VOLUME].str.strip()
    volume_ok = volume_text.str.fullmatch(r'\d+')

    problems = pd.Series('', index=raw.index)
    problems[timestamps.isna()] = 'malformed timestamp'
    problems[(problems == '') & (symbols == '')] = 'missing symbol'
    problems[(problems == '') & prices.isna()] = 'malformed price'
    problems[(problems == '') & ~volume_ok] = 'malformed volume'

    valid_prices = prices.where(problems == '')
    non_positive_price = valid_prices.map(
        lambda price: price is not None and not pd.isna(price) and price <= 0)
    problems[(problems == '') & non_positive_price] = 'non-positive price'

    volumes = pd.to_numeric(volume_text.where(volume_ok, '0'))
    problems[(problems == '') & (volumes < 1)] = 'non-positive volume'

    bad = problems != ''
    if bad.any():
        _report_bad_rows(raw, problems[bad], line_numbers[bad.to_numpy()],
                         strict=strict)

    ticks = pd.DataFrame({
        c.TICK_COLUMN_TIMESTAMP: timestamps[~bad],
        c.TICK_COLUMN_SYMBOL: symbols[~bad],
        c.TICK_COLUMN_PRICE: prices[~bad].astype(object),
        c.TICK_COLUMN_VOLUME: volumes[~bad].astype('int64'),
    })

    ticks = _filter_session(ticks, config)

    ticks = ticks.sort_values(
        [c.TICK_COLUMN_SYMBOL, c.TICK_COLUMN_TIMESTAMP], kind='mergesort')

    logger.info(f"Parsed {len(ticks)} ticks for "
                f"{ticks[c.TICK_COLUMN_SYMBOL].nunique()} symbols")

    return ticks.reset_index(drop=True)


def read_symbol_metadata(source: BinaryIO) -> Dict[str, str]:
    """Read the symbol,sector metadata CSV into a symbol -> sector map."""
    frame = pd.read_csv(source, dtype=str, keep_default_na=False)

    expected = [c.METADATA_COLUMN_SYMBOL, c.METADATA_COLUMN_SECTOR]
    if list(frame.columns) != expected:
        raise ValueError(
            f"Expected metadata header {','.join(expected)}, got "
            f"{','.join(frame.columns)}")

    return dict(zip(frame[c.METADATA_COLUMN_SYMBOL].str.strip(),
                    frame[c.METADATA_COLUMN_SECTOR].str.strip()))


def _filter_session(ticks: pd.DataFrame,
                    config: SessionSettings) -> pd.DataFrame:
    timestamps = ticks[c.TICK_COLUMN_TIMESTAMP]
    seconds = (timestamps - timestamps.dt.normalize()).dt.total_seconds()

    open_seconds = _seconds_of_day(config.session_open)
    close_seconds = _seconds_of_day(config.session_close)

    keep = (seconds >= open_seconds) & (seconds < close_seconds)

    if config.trading_days:
        keep &= timestamps.dt.date.isin(set(config.trading_days))

    discarded = int((~keep).sum())
    if discarded:
        logger.debug(f"Discarded {discarded} ticks outside the session")

    return ticks[keep]


def _report_bad_rows(raw: pd.DataFrame, problems: pd.Series,
                     line_numbers: np.ndarray, strict: bool) -> None:
    if strict:
        first = problems.index[0]
        raise TickParseError(
            f"{problems.iloc[0]} in row {','.join(raw.loc[first])}",
            line_number=int(line_numbers[0]))

    for problem, line_number in zip(problems, line_numbers):
        logger.warning(f"Skipping tick row at line {line_number}: {problem}")


def _to_decimal(text: str) -> Optional[Decimal]:
    try:
        value = Decimal(text)
    except InvalidOperation:
        return None

    if not value.is_finite():
        return None

    return value


def _seconds_of_day(time_of_day) -> int:
    return time_of_day.hour * 3600 + time_of_day.minute * 60 + \
        time_of_day.second


def _line_from_parser_error(error: Exception) -> Optional[int]:
    match = re.search(r'line (\d+)', str(error))
    return int(match.group(1)) if match else None
