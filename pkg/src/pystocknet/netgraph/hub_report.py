from typing import Dict, Optional

import numpy as np
import pandas as pd

from pystocknet import constants as c
from pystocknet.netgraph.graph_class import SpanningTree
from pystocknet.netgraph.spectral_centrality import CentralityReport

HUB_COLUMNS = ['hub', 'sector', 'degree', 'perron_pct', 'neighbors',
               'neighbor_sectors', 'same_sector_fraction']


def hub_neighborhood_report(
        tree: SpanningTree,
        centrality: CentralityReport,
        sectors: Optional[Dict[str, str]] = None,
        hub_threshold: int = c.DEFAULT_HUB_THRESHOLD) -> pd.DataFrame:
    """Tree neighbours of every hub and how many share the hub's sector.

    Parameters
    ----------
    tree : SpanningTree
    centrality : CentralityReport
        Scores of the same tree.
    sectors : Dict[str, str], optional
        Sector per symbol, by default the tree's own labels.
    hub_threshold : int, optional
        Nodes with degree strictly above this value are hubs, by default 4.

    Returns
    -------
    pd.DataFrame
        One row per hub, highest degree first. Neighbours and their sectors
        are ";"-joined. Empty if no node exceeds the threshold.

    """
    sectors = tree.sectors if sectors is None else sectors
    degrees = tree.degrees()
    neighbors = tree.neighbors()

    rows = []
    for node in np.flatnonzero(degrees > hub_threshold):
        hub = tree.symbols[node]
        hub_sector = sectors.get(hub, c.UNKNOWN_SECTOR)
        names = [tree.symbols[other] for other in neighbors[node]]
        neighbor_sectors = [sectors.get(name, c.UNKNOWN_SECTOR)
                            for name in names]

        rows.append({
            'hub': hub,
            'sector': hub_sector,
            'degree': int(degrees[node]),
            'perron_pct': float(centrality.perron_pct[node]),
            'neighbors': ';'.join(names),
            'neighbor_sectors': ';'.join(neighbor_sectors),
            'same_sector_fraction': float(np.mean(
                [sector == hub_sector for sector in neighbor_sectors])),
        })

    report = pd.DataFrame(rows, columns=HUB_COLUMNS)
    return report.sort_values(['degree', 'perron_pct'], ascending=False,
                              kind='mergesort').reset_index(drop=True)
