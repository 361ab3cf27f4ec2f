from .market_spec import CouplingSpec, MarketSpec, SectorSpec
from .generate_returns import generate_returns, standardized_returns
from .generate_ticks import generate_metadata, generate_ticks, synthetic_prices
from .block_graph import generate_block_adjacency
