import logging

import numpy as np
import pandas as pd

from pystocknet import constants as c
from pystocknet.ingest.returns_panel import ReturnsPanel
from pystocknet.random_streams import derive_rng
from pystocknet.synth.market_spec import MarketSpec

logger = logging.getLogger(__name__)

STREAM_SYNTH = 'synth'


def standardized_returns(spec: MarketSpec) -> np.ndarray:
    """Unit-variance m x k returns of the factor model with couplings.

    Square coupling: y = (x**2 - 1) / sqrt(2), exactly standardized for a
    standard normal x. Sine coupling: y = sin(4 x) + 0.1 e, standardized
    with its sample moments.

    """
    n_observations = spec.days * (spec.windows_per_day - 1)
    n_sectors = len(spec.sectors)
    rng = derive_rng(spec.seed, STREAM_SYNTH, 'returns')

    market = rng.standard_normal(n_observations)
    sector_factors = rng.standard_normal((n_observations, n_sectors))
    noise = rng.standard_normal((n_observations, spec.n_symbols))

    sector_index = spec.sector_index
    intra = np.array([sector.intra_correlation
                      for sector in spec.sectors])[sector_index]
    beta = spec.market_beta
    gamma = np.sqrt(intra - beta ** 2)
    sigma = np.sqrt(1 - intra)

    returns = beta * market[:, None] + \
        gamma * sector_factors[:, sector_index] + sigma * noise

    for pair in spec.nonlinear_pairs:
        x = returns[:, pair.i]
        if pair.form == c.COUPLING_SQUARE:
            returns[:, pair.j] = (x ** 2 - 1) / np.sqrt(2)
        else:
            coupling_rng = derive_rng(spec.seed, STREAM_SYNTH, 'coupling',
                                      pair.i, pair.j)
            y = np.sin(c.SYNTH_SINE_FREQUENCY * x) + \
                c.SYNTH_SINE_NOISE * coupling_rng.standard_normal(len(x))
            returns[:, pair.j] = (y - y.mean()) / y.std()

    return returns


def generate_returns(spec: MarketSpec) -> ReturnsPanel:
    """Synthetic returns panel of a market spec.

    Returns
    -------
    ReturnsPanel
        days x (windows_per_day - 1) rows, labelled like the panels built
        from ticks, returns scaled to spec.volatility.

    """
    returns = spec.volatility * standardized_returns(spec)

    index = pd.DatetimeIndex(np.concatenate(
        [spec.session.window_starts(day)[1:] for day in spec.trading_days]),
        name=c.PANEL_INDEX_NAME)

    logger.info(f"Generated {returns.shape[0]} returns for "
                f"{spec.n_symbols} synthetic symbols")

    return ReturnsPanel(
        returns=pd.DataFrame(returns, index=index, columns=spec.symbols),
        sectors=spec.sector_of_symbol,
        period=c.DEFAULT_PERIOD_NAME,
        windows_per_day=spec.windows_per_day,
        filled_counts=pd.DataFrame(0, index=spec.trading_days,
                                   columns=spec.symbols))
