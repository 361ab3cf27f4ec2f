from dataclasses import dataclass, field
from typing import Dict, List, Tuple

import networkx as nx
import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from pystocknet import constants as c

Edge = Tuple[int, int, float]


@dataclass
class WeightedGraph:
    """Undirected weighted graph over symbols.

    Attributes
    ----------
    symbols : List[str]
        Node labels, node i is symbols[i].
    sectors : Dict[str, str]
        Sector label per symbol.
    edges : List[Tuple[int, int, float]]
        Edges (i, j, weight) with i < j and weight >= 0.

    """

    symbols: List[str]
    sectors: Dict[str, str] = field(default_factory=dict)
    edges: List[Edge] = field(default_factory=list)

    def __post_init__(self):
        self.symbols = list(self.symbols)
        self.edges = [(int(i), int(j), float(w)) for i, j, w in self.edges]

        seen = set()
        for i, j, weight in self.edges:
            if i == j:
                raise ValueError(f"Self-loop on node {i}")
            if not 0 <= i < j < self.n_nodes:
                raise ValueError(
                    f"Edge ({i}, {j}) is not in canonical form i < j < "
                    f"{self.n_nodes}")
            if weight < 0 or not np.isfinite(weight):
                raise ValueError(f"Edge ({i}, {j}) has invalid weight {weight}")
            if (i, j) in seen:
                raise ValueError(f"Duplicate edge ({i}, {j})")
            seen.add((i, j))

    @property
    def n_nodes(self) -> int:
        return len(self.symbols)

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    @property
    def total_weight(self) -> float:
        return float(sum(weight for _, _, weight in self.edges))

    def sector(self, node: int) -> str:
        return self.sectors.get(self.symbols[node], c.UNKNOWN_SECTOR)

    def neighbors(self) -> List[List[int]]:
        """Sorted neighbour list of every node."""
        adjacency = [[] for _ in range(self.n_nodes)]
        for i, j, _ in self.edges:
            adjacency[i].append(j)
            adjacency[j].append(i)
        return [sorted(nodes) for nodes in adjacency]

    def degrees(self) -> np.ndarray:
        degrees = np.zeros(self.n_nodes, dtype=int)
        for i, j, _ in self.edges:
            degrees[i] += 1
            degrees[j] += 1
        return degrees

    def is_connected(self) -> bool:
        if self.n_nodes == 0:
            return False
        rows = [i for i, _, _ in self.edges]
        cols = [j for _, j, _ in self.edges]
        pattern = csr_matrix((np.ones(len(rows)), (rows, cols)),
                             shape=(self.n_nodes, self.n_nodes))
        n_components, _ = connected_components(pattern, directed=False)
        return n_components == 1

    def to_networkx(self) -> nx.Graph:
        """networkx view with symbol node ids, sector and weight attributes."""
        graph = nx.Graph()
        for node, symbol in enumerate(self.symbols):
            graph.add_node(symbol, sector=self.sector(node))
        for i, j, weight in self.edges:
            graph.add_edge(self.symbols[i], self.symbols[j], weight=weight)
        return graph


@dataclass
class SpanningTree(WeightedGraph):
    """A connected graph with exactly n_nodes - 1 edges."""

    def __post_init__(self):
        super().__post_init__()

        if self.n_edges != self.n_nodes - 1:
            raise ValueError(
                f"A spanning tree on {self.n_nodes} nodes has "
                f"{self.n_nodes - 1} edges, got {self.n_edges}")
        if not self.is_connected():
            raise ValueError("Spanning tree is not connected")


def graph_from_distances(matrix, symbols: List[str],
                         sectors: Dict[str, str] = None) -> WeightedGraph:
    """Complete graph weighted by a distance matrix.

    Raises
    ------
    ValueError
        If the matrix is not square, symmetric, zero on the diagonal and
        non-negative, or does not match the symbols.

    """
    matrix = np.asarray(matrix, dtype=float)
    k = len(symbols)

    if matrix.shape != (k, k):
        raise ValueError(
            f"Distance matrix has shape {matrix.shape}, expected ({k}, {k})")
    if np.max(np.abs(matrix - matrix.T), initial=0) > c.TOL_SYMMETRY:
        raise ValueError("Distance matrix is not symmetric")
    if np.any(np.diag(matrix) != 0):
        raise ValueError("Distance matrix has a non-zero diagonal")
    if np.any(matrix < 0):
        raise ValueError("Distance matrix has negative entries")

    rows, cols = np.triu_indices(k, k=1)
    edges = list(zip(rows.tolist(), cols.tolist(),
                     matrix[rows, cols].tolist()))

    return WeightedGraph(symbols=symbols, sectors=dict(sectors or {}),
                         edges=edges)
