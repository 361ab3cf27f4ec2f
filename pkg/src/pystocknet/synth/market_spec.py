import datetime
from dataclasses import dataclass, field
from typing import Any, Dict, List

import numpy as np
import pandas as pd

from pystocknet import constants as c
from pystocknet.settings_pystocknet import PystocknetSettings, SessionSettings

SYMBOL_PREFIX = 'SYM'
# standard deviation of one synthetic window return
DEFAULT_VOLATILITY = 1e-3


@dataclass(frozen=True)
class SectorSpec:
    name: str
    size: int
    intra_correlation: float


@dataclass(frozen=True)
class CouplingSpec:
    """Column j is replaced by a nonlinear function of column i."""

    i: int
    j: int
    form: str


@dataclass
class MarketSpec:
    """A synthetic market with planted structure.

    Returns follow a factor model: every symbol of sector s loads the market
    factor with beta = market_beta and its sector factor with
    gamma_s = sqrt(intra_correlation - beta**2), plus idiosyncratic noise,
    all scaled to unit variance before multiplying with the volatility. Two
    symbols of one sector correlate with intra_correlation, symbols of
    different sectors with beta**2.

    Attributes
    ----------
    sectors : List[SectorSpec]
        Planted sectors, symbols are numbered through in sector order.
    market_beta : float
        Market factor loading in [0, 1).
    nonlinear_pairs : List[CouplingSpec]
        Pairs whose column j is overwritten by a function of column i.
    days : int
        Number of trading days.
    seed : int
        Master seed.
    session : SessionSettings
        Session grid, provides windows_per_day.
    start_date : datetime.date
        First calendar date, trading days are business days from here.
    volatility : float
        Standard deviation of a window return.
    price_scale : float
        Opening price of every symbol.
    drop_probability : float
        Probability that a window carries no trade in the tick file.

    Raises
    ------
    ValueError
        If the implied correlation matrix is not positive definite, or a
        parameter is out of range.

    """

    sectors: List[SectorSpec]
    market_beta: float
    nonlinear_pairs: List[CouplingSpec] = field(default_factory=list)
    days: int = c.DEFAULT_SYNTH_DAYS
    seed: int = 0
    session: SessionSettings = field(
        default_factory=lambda: SessionSettings({}))
    start_date: datetime.date = datetime.date.fromisoformat(
        c.DEFAULT_SYNTH_START_DATE)
    volatility: float = DEFAULT_VOLATILITY
    price_scale: float = c.DEFAULT_SYNTH_PRICE_SCALE
    drop_probability: float = 0.0

    def __post_init__(self):
        self.sectors = [
            sector if isinstance(sector, SectorSpec) else SectorSpec(**sector)
            for sector in self.sectors]
        self.nonlinear_pairs = [
            pair if isinstance(pair, CouplingSpec) else CouplingSpec(**pair)
            for pair in self.nonlinear_pairs]
        self._validate()

    def _validate(self):
        if not self.sectors:
            raise ValueError("A synthetic market needs at least one sector")
        if not 0 <= self.market_beta < 1:
            raise ValueError(
                f"market_beta must be in [0, 1), got {self.market_beta}")
        if self.days < 1:
            raise ValueError(f"days must be at least 1, got {self.days}")
        if self.volatility <= 0 or self.price_scale <= 0:
            raise ValueError("volatility and price_scale must be positive")
        if not 0 <= self.drop_probability < 1:
            raise ValueError(
                f"drop_probability must be in [0, 1), got "
                f"{self.drop_probability}")

        for sector in self.sectors:
            if sector.size < 1:
                raise ValueError(f"Sector {sector.name!r} is empty")
            if not self.market_beta ** 2 <= sector.intra_correlation < 1:
                raise ValueError(
                    f"Sector {sector.name!r}: intra_correlation must be in "
                    f"[market_beta**2, 1) = [{self.market_beta ** 2}, 1), got "
                    f"{sector.intra_correlation}")

        targets = set()
        for pair in self.nonlinear_pairs:
            if pair.form not in c.VALID_COUPLINGS:
                raise ValueError(
                    f"Unknown coupling form {pair.form!r}. Choose from "
                    f"{', '.join(c.VALID_COUPLINGS)}")
            if not (0 <= pair.i < self.n_symbols and
                    0 <= pair.j < self.n_symbols) or pair.i == pair.j:
                raise ValueError(f"Invalid coupled pair ({pair.i}, {pair.j})")
            if pair.j in targets:
                raise ValueError(f"Symbol {pair.j} is coupled twice")
            targets.add(pair.j)

        if {pair.i for pair in self.nonlinear_pairs} & targets:
            raise ValueError("A coupled symbol cannot drive another pair")

        try:
            np.linalg.cholesky(self.implied_correlation())
        except np.linalg.LinAlgError:
            raise ValueError(
                "Implied correlation matrix is not positive definite") \
                from None

    @classmethod
    def from_settings(cls, settings: PystocknetSettings) -> 'MarketSpec':
        synth = settings.synth
        return cls(
            sectors=[SectorSpec(
                name=sector[c.KEY_SECTOR_NAME],
                size=int(sector[c.KEY_SECTOR_SIZE]),
                intra_correlation=float(
                    sector[c.KEY_SECTOR_INTRA_CORRELATION]))
                for sector in synth.sectors],
            market_beta=synth.market_beta,
            nonlinear_pairs=[CouplingSpec(
                i=int(pair[c.KEY_PAIR_I]), j=int(pair[c.KEY_PAIR_J]),
                form=pair[c.KEY_PAIR_FORM])
                for pair in synth.nonlinear_pairs],
            days=synth.days,
            seed=settings.seed,
            session=settings.session,
            start_date=synth.start_date,
            price_scale=synth.price_scale,
            drop_probability=synth.drop_probability)

    @property
    def n_symbols(self) -> int:
        return sum(sector.size for sector in self.sectors)

    @property
    def windows_per_day(self) -> int:
        return self.session.windows_per_day

    @property
    def symbols(self) -> List[str]:
        width = max(3, len(str(self.n_symbols - 1)))
        return [f"{SYMBOL_PREFIX}{index:0{width}d}"
                for index in range(self.n_symbols)]

    @property
    def sector_of_symbol(self) -> Dict[str, str]:
        labels = [sector.name for sector in self.sectors
                  for _ in range(sector.size)]
        return dict(zip(self.symbols, labels))

    @property
    def sector_index(self) -> np.ndarray:
        """Sector position of every symbol."""
        return np.repeat(np.arange(len(self.sectors)),
                         [sector.size for sector in self.sectors])

    @property
    def trading_days(self) -> List[datetime.date]:
        return list(pd.bdate_range(start=self.start_date,
                                   periods=self.days).date)

    def implied_correlation(self) -> np.ndarray:
        """Correlation matrix of the linear factor model."""
        sector_index = self.sector_index
        intra = np.array([sector.intra_correlation
                          for sector in self.sectors])[sector_index]

        same_sector = sector_index[:, None] == sector_index[None, :]
        correlation = np.where(
            same_sector, intra[:, None] * np.ones(self.n_symbols),
            self.market_beta ** 2)
        np.fill_diagonal(correlation, 1.0)
        return correlation

    def ground_truth(self) -> Dict[str, Any]:
        """Planted structure, as written to the truth sidecar."""
        return {
            'symbols': self.symbols,
            'sectors': {sector.name: [
                symbol for symbol, label in self.sector_of_symbol.items()
                if label == sector.name] for sector in self.sectors},
            'intra_correlation': {sector.name: sector.intra_correlation
                                  for sector in self.sectors},
            'market_beta': self.market_beta,
            'nonlinear_pairs': [
                {c.KEY_PAIR_I: self.symbols[pair.i],
                 c.KEY_PAIR_J: self.symbols[pair.j],
                 c.KEY_PAIR_FORM: pair.form}
                for pair in self.nonlinear_pairs],
            'trading_days': [str(day) for day in self.trading_days],
            'windows_per_day': self.windows_per_day,
        }
