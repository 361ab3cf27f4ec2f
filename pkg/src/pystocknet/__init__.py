__version__ = '0.1.0'

from .settings_pystocknet import PystocknetSettings
from .random_streams import derive_rng
from .ingest import (
    ReturnsPanel, TickRecord, build_vwap_bars, compute_log_returns,
    filter_symbols, parse_ticks, split_periods)
from .infostats import PairMatrix, pair_sweep
from .rmt import SpectrumReport, eigen_decompose, mp_bounds
from .netgraph import SpanningTree, graph_from_distances, mst_prim
from .synth import MarketSpec, generate_returns, generate_ticks
