import logging
from pathlib import Path
from typing import Dict, Optional, Tuple

import pandas as pd

from pystocknet import constants as c
from pystocknet.netgraph.degree_distribution import (
    DegreeDistribution, degree_distribution, powerlaw_summary)
from pystocknet.netgraph.export_graph import export_graph
from pystocknet.netgraph.graph_class import graph_from_distances
from pystocknet.netgraph.hub_report import hub_neighborhood_report
from pystocknet.netgraph.mst_prim import mst_prim
from pystocknet.netgraph.spectral_centrality import centrality_report
from pystocknet.output_writer import OutputWriter, read_csv_output
from pystocknet.pipeline.cmd_pairs import read_pair_matrix
from pystocknet.pipeline.period_panels import load_period_panels
from pystocknet.settings_pystocknet import PystocknetSettings

logger = logging.getLogger(__name__)

NetworkKey = Tuple[str, str]


def cmd_network(settings: PystocknetSettings, period: Optional[str] = None,
                method: Optional[str] = None
                ) -> Dict[NetworkKey, DegreeDistribution]:
    """Minimum spanning trees of the pair distances, with their statistics.

    For every period and distance method writes
    network/<period>/<method>/tree.<format>, degree.csv (exponent
    estimates in the header lines), centrality.csv and hubs.csv, then
    updates network/powerlaw_summary.csv.

    Parameters
    ----------
    settings : PystocknetSettings
    period : str, optional
        Restrict to one period.
    method : str, optional
        Restrict to one distance method, "corr" or "mi". By default the
        configured network methods.

    """
    network = settings.network
    methods = network.methods if method is None else [method]
    for name in methods:
        if name not in c.VALID_METHODS:
            raise ValueError(
                f"Unknown network method {name!r}. Choose from "
                f"{', '.join(c.VALID_METHODS)}")

    writer = OutputWriter(settings)
    distributions = {}

    for panel in load_period_panels(settings, period):
        pairs = read_pair_matrix(settings.output_dir, panel.period)

        for name in methods:
            graph = graph_from_distances(pairs.distance(name), pairs.symbols,
                                         panel.sectors)
            tree = mst_prim(graph)
            distribution = degree_distribution(
                tree, hub_threshold=network.hub_threshold)
            centrality = centrality_report(tree)

            logger.info(
                f"Period {panel.period!r}, method {name!r}: tree weight "
                f"{tree.total_weight:.4f}, alpha_hat "
                f"{distribution.alpha_hat:.3f}, {len(distribution.hubs)} hubs")

            tree_dir = Path(c.DIR_NETWORK) / panel.period / name
            header = {'period': panel.period, 'method': name}
            writer.write_bytes(
                tree_dir / f"{c.FILE_TREE_STEM}.{network.export_format}",
                export_graph(tree, network.export_format, centrality,
                             metadata={**writer.metadata, **header}),
                kind=network.export_format)
            writer.write_csv(tree_dir / c.FILE_DEGREE,
                             distribution.histogram(), header_lines={
                                 **header,
                                 'alpha_hat': distribution.alpha_hat,
                                 'alpha_hat_uncorrected':
                                     distribution.alpha_hat_uncorrected})
            writer.write_csv(tree_dir / c.FILE_CENTRALITY,
                             centrality.frame(tree), header_lines=header)
            writer.write_csv(tree_dir / c.FILE_HUBS,
                             hub_neighborhood_report(
                                 tree, centrality, panel.sectors,
                                 network.hub_threshold),
                             header_lines=header)

            distributions[(panel.period, name)] = distribution

    summary = _merge_summary(writer, powerlaw_summary(distributions))
    writer.write_csv(Path(c.DIR_NETWORK) / c.FILE_POWERLAW_SUMMARY, summary)
    writer.write_manifest()

    return distributions


def _merge_summary(writer: OutputWriter, summary: pd.DataFrame
                   ) -> pd.DataFrame:
    """Keep rows of earlier runs for networks not rebuilt in this one."""
    path = writer.path(c.DIR_NETWORK, c.FILE_POWERLAW_SUMMARY)
    if not path.exists():
        return summary

    previous = read_csv_output(path, dtype={'period': str, 'method': str})
    rebuilt = set(zip(summary['period'], summary['method']))
    keep = [(period, method) not in rebuilt for period, method
            in zip(previous['period'], previous['method'])]

    merged = pd.concat([previous[keep], summary], ignore_index=True)
    return merged.sort_values(['period', 'method'], kind='mergesort') \
        .reset_index(drop=True)
