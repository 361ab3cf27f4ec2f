import io
from typing import Any, Dict, Optional

import networkx as nx

from pystocknet import constants as c
from pystocknet.netgraph.graph_class import SpanningTree
from pystocknet.netgraph.spectral_centrality import (
    CentralityReport, centrality_report)


def tree_to_networkx(tree: SpanningTree,
                     centrality: Optional[CentralityReport] = None,
                     metadata: Optional[Dict[str, Any]] = None) -> nx.Graph:
    """networkx graph with node attributes sector, degree, perron_pct and
    community, and edge attribute weight."""
    if centrality is None:
        centrality = centrality_report(tree)

    graph = tree.to_networkx()
    degrees = tree.degrees()
    for node, symbol in enumerate(tree.symbols):
        graph.nodes[symbol]['degree'] = int(degrees[node])
        graph.nodes[symbol]['perron_pct'] = float(centrality.perron_pct[node])
        graph.nodes[symbol]['community'] = int(centrality.community[node])

    for key, value in (metadata or {}).items():
        graph.graph[key] = value if isinstance(value, (int, float)) \
            else str(value)

    return graph


def export_graph(tree: SpanningTree,
                 export_format: str = c.DEFAULT_EXPORT_FORMAT,
                 centrality: Optional[CentralityReport] = None,
                 metadata: Optional[Dict[str, Any]] = None) -> bytes:
    """Serialize a tree as GraphML or GEXF.

    Raises
    ------
    ValueError
        If the format is not "graphml" or "gexf".

    """
    if export_format not in c.VALID_EXPORT_FORMATS:
        raise ValueError(
            f"Unsupported export format {export_format!r}. Choose one of "
            f"{', '.join(c.VALID_EXPORT_FORMATS)}")

    graph = tree_to_networkx(tree, centrality, metadata)

    buffer = io.BytesIO()
    if export_format == c.EXPORT_FORMAT_GRAPHML:
        nx.write_graphml(graph, buffer)
    else:
        nx.write_gexf(graph, buffer)

    return buffer.getvalue()


def read_graph(content: bytes, export_format: str) -> nx.Graph:
    """Parse a document written by export_graph."""
    if export_format == c.EXPORT_FORMAT_GRAPHML:
        return nx.read_graphml(io.BytesIO(content))
    if export_format == c.EXPORT_FORMAT_GEXF:
        return nx.read_gexf(io.BytesIO(content))

    raise ValueError(f"Unsupported export format {export_format!r}")
