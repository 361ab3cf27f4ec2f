import datetime
from dataclasses import dataclass
from decimal import Decimal
from typing import Iterable, List

import pandas as pd

from pystocknet import constants as c


@dataclass(frozen=True)
class TickRecord:
    """One trade.

    Attributes
    ----------
    timestamp : datetime.datetime
        Exchange-local wall-clock time of the trade, one second resolution.
    symbol : str
        Instrument identifier.
    price : Decimal
        Trade price in currency units, strictly positive.
    volume : int
        Traded shares, at least 1.

    """

    timestamp: datetime.datetime
    symbol: str
    price: Decimal
    volume: int

    def __post_init__(self):
        if self.price <= 0:
            raise ValueError(f"Tick price must be positive, got {self.price}")
        if self.volume < 1:
            raise ValueError(f"Tick volume must be >= 1, got {self.volume}")


def records_to_frame(records: Iterable[TickRecord]) -> pd.DataFrame:
    """Convert tick records to the tick table used by the ingest functions."""
    records = list(records)
    frame = pd.DataFrame({
        c.TICK_COLUMN_TIMESTAMP: pd.to_datetime(
            [record.timestamp for record in records]),
        c.TICK_COLUMN_SYMBOL: [record.symbol for record in records],
        c.TICK_COLUMN_PRICE: pd.Series(
            [record.price for record in records], dtype=object),
        c.TICK_COLUMN_VOLUME: pd.Series(
            [record.volume for record in records], dtype='int64'),
    })
    return frame


def frame_to_records(frame: pd.DataFrame) -> List[TickRecord]:
    """Convert a tick table back to a list of TickRecord."""
    return [
        TickRecord(timestamp=row.timestamp.to_pydatetime(),
                   symbol=row.symbol, price=row.price, volume=int(row.volume))
        for row in frame.itertuples(index=False)]


def format_tick_csv(records: Iterable[TickRecord]) -> bytes:
    """Serialize tick records with the tick CSV grammar.

    Header timestamp,symbol,price,volume; ISO-8601 timestamps with seconds
    precision; prices written as their exact decimal representation.

    """
    return tick_frame_to_csv(records_to_frame(records))


def tick_frame_to_csv(frame: pd.DataFrame) -> bytes:
    """Serialize a tick table (Decimal prices) with the tick CSV grammar."""
    frame = frame[c.TICK_COLUMNS].copy()
    frame[c.TICK_COLUMN_TIMESTAMP] = frame[c.TICK_COLUMN_TIMESTAMP].dt.strftime(
        '%Y-%m-%dT%H:%M:%S')
    frame[c.TICK_COLUMN_PRICE] = frame[c.TICK_COLUMN_PRICE].map(
        lambda price: format(price, 'f'))
    return frame.to_csv(index=False, lineterminator='\n').encode('utf-8')
