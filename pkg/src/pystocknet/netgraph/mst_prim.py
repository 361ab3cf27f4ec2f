import heapq
import logging

from pystocknet.netgraph.graph_class import SpanningTree, WeightedGraph

logger = logging.getLogger(__name__)


def mst_prim(graph: WeightedGraph) -> SpanningTree:
    """Minimum spanning tree with Prim's algorithm.

    The tree grows from node 0. The frontier is ordered by
    (weight, min(i, j), max(i, j)), so ties between equal weights always go
    to the smallest canonical edge and the result is deterministic.

    Raises
    ------
    ValueError
        If the graph is empty or disconnected.

    """
    n_nodes = graph.n_nodes
    if n_nodes == 0:
        raise ValueError("Cannot build a spanning tree of an empty graph")

    incident = [[] for _ in range(n_nodes)]
    for i, j, weight in graph.edges:
        incident[i].append((weight, i, j))
        incident[j].append((weight, i, j))

    in_tree = [False] * n_nodes
    in_tree[0] = True
    frontier = list(incident[0])
    heapq.heapify(frontier)

    tree_edges = []
    while frontier and len(tree_edges) < n_nodes - 1:
        weight, i, j = heapq.heappop(frontier)
        if in_tree[i] and in_tree[j]:
            continue

        new_node = j if in_tree[i] else i
        in_tree[new_node] = True
        tree_edges.append((i, j, weight))

        for edge in incident[new_node]:
            _, a, b = edge
            if not (in_tree[a] and in_tree[b]):
                heapq.heappush(frontier, edge)

    if len(tree_edges) != n_nodes - 1:
        raise ValueError(
            f"Graph is disconnected: spanning tree reached "
            f"{sum(in_tree)} of {n_nodes} nodes")

    tree = SpanningTree(symbols=graph.symbols, sectors=dict(graph.sectors),
                        edges=sorted(tree_edges))
    logger.debug(f"Spanning tree of {n_nodes} nodes, total weight "
                 f"{tree.total_weight:.6f}")

    return tree
