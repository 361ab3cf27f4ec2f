import logging
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np
import pandas as pd
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from pystocknet import constants as c
from pystocknet.netgraph.graph_class import WeightedGraph
from pystocknet.rmt.spectrum import orient_vectors

logger = logging.getLogger(__name__)


class FiedlerSplit(NamedTuple):
    fiedler_vector: np.ndarray
    community: np.ndarray
    # lambda_2 is repeated, the split depends on the node order
    degenerate: bool = False


@dataclass
class CentralityReport:
    """Spectral node scores of a tree.

    Attributes
    ----------
    perron_scores : np.ndarray
        Perron eigenvector, non-negative, summing to 1.
    fiedler_values : np.ndarray
        Unit-norm Fiedler vector.
    community : np.ndarray
        0 for the non-negative side of the Fiedler vector, 1 otherwise.

    """

    perron_scores: np.ndarray
    fiedler_values: np.ndarray
    community: np.ndarray

    @property
    def perron_pct(self) -> np.ndarray:
        return np.round(100 * self.perron_scores, c.PERCENT_DECIMALS)

    def frame(self, graph: WeightedGraph) -> pd.DataFrame:
        """symbol, sector, degree, perron_pct, fiedler and community, sorted
        by Perron score, highest first."""
        table = pd.DataFrame({
            'symbol': graph.symbols,
            'sector': [graph.sector(node) for node in range(graph.n_nodes)],
            'degree': graph.degrees(),
            'perron_pct': self.perron_pct,
            'fiedler': self.fiedler_values,
            'community': self.community,
        })
        order = np.argsort(-self.perron_scores, kind='stable')
        return table.iloc[order].reset_index(drop=True)


def adjacency_matrix(graph: WeightedGraph) -> np.ndarray:
    """Symmetric 0/1 adjacency matrix with zero diagonal."""
    adjacency = np.zeros((graph.n_nodes, graph.n_nodes))
    for i, j, _ in graph.edges:
        adjacency[i, j] = adjacency[j, i] = 1.0
    return adjacency


def laplacian_matrix(adjacency) -> np.ndarray:
    """Graph Laplacian L = D - A."""
    adjacency = _check_adjacency(adjacency)
    return np.diag(adjacency.sum(axis=1)) - adjacency


def perron_scores(adjacency) -> np.ndarray:
    """Perron eigenvector of a connected graph, normalized to sum 1.

    Power iteration from the uniform vector on A + max(A) I, which has the
    eigenvectors of A and a strictly dominant Perron root even for
    bipartite graphs such as trees. Iteration stops when successive
    iterates differ by less than 1e-10 in max norm. If that does not happen
    within 1e5 iterations, the dense symmetric solution is used.

    Raises
    ------
    ValueError
        If the graph is disconnected.

    """
    adjacency = _check_adjacency(adjacency)
    n_nodes = adjacency.shape[0]
    if not _is_connected(adjacency):
        raise ValueError("Perron scores need a connected graph")
    if n_nodes == 1:
        return np.ones(1)

    shifted = adjacency + adjacency.max() * np.eye(n_nodes)
    scores = np.full(n_nodes, 1 / n_nodes)

    for _ in range(c.MAX_POWER_ITERATIONS):
        update = shifted @ scores
        update /= update.sum()
        if np.max(np.abs(update - scores)) < c.TOL_POWER_ITERATION:
            return update
        scores = update

    logger.warning(
        f"Power iteration did not converge in {c.MAX_POWER_ITERATIONS} "
        f"iterations, using the dense eigensolver")
    _, vectors = np.linalg.eigh(adjacency)
    perron = np.abs(vectors[:, -1])
    return perron / perron.sum()


def fiedler_communities(laplacian) -> FiedlerSplit:
    """Split a connected graph by the sign of its Fiedler vector.

    The Fiedler vector is the unit eigenvector of the second-smallest
    Laplacian eigenvalue, oriented so that its largest-magnitude entry is
    positive. Nodes with v >= 0 or |v| < 1e-10 form community 0.

    If the second-smallest eigenvalue is repeated (cycles, stars with four
    or more leaves) the Fiedler vector is any vector of its eigenspace, so
    the split depends on the node order. Such splits are flagged as
    degenerate and a warning is logged.

    Raises
    ------
    ValueError
        If the algebraic connectivity is 0 (disconnected graph).

    """
    laplacian = np.asarray(laplacian, dtype=float)
    if laplacian.shape[0] < 2:
        raise ValueError("A Fiedler split needs at least 2 nodes")

    eigenvalues, eigenvectors = np.linalg.eigh(laplacian)
    if eigenvalues[1] <= c.TOL_CONNECTIVITY:
        raise ValueError(
            f"Graph is disconnected, algebraic connectivity "
            f"{eigenvalues[1]:.3e}")

    degenerate = bool(laplacian.shape[0] > 2 and
                      eigenvalues[2] - eigenvalues[1] < c.TOL_FIEDLER_GAP)
    if degenerate:
        logger.warning(
            f"Algebraic connectivity {eigenvalues[1]:.6g} is repeated, the "
            "Fiedler split depends on the node order")

    fiedler = orient_vectors(eigenvectors[:, 1])
    nonnegative = (fiedler >= 0) | (np.abs(fiedler) < c.TOL_FIEDLER_ZERO)

    return FiedlerSplit(fiedler_vector=fiedler,
                        community=np.where(nonnegative, 0, 1),
                        degenerate=degenerate)


def centrality_report(graph: WeightedGraph) -> CentralityReport:
    """Perron scores and Fiedler communities of a connected graph."""
    adjacency = adjacency_matrix(graph)
    split = fiedler_communities(laplacian_matrix(adjacency))

    return CentralityReport(perron_scores=perron_scores(adjacency),
                            fiedler_values=split.fiedler_vector,
                            community=split.community)


def _check_adjacency(adjacency) -> np.ndarray:
    adjacency = np.asarray(adjacency, dtype=float)
    if adjacency.ndim != 2 or adjacency.shape[0] != adjacency.shape[1]:
        raise ValueError(f"Expected a square matrix, got {adjacency.shape}")
    if np.any(adjacency < 0):
        raise ValueError("Adjacency matrix has negative entries")
    if np.max(np.abs(adjacency - adjacency.T), initial=0) > c.TOL_SYMMETRY:
        raise ValueError("Adjacency matrix is not symmetric")
    return adjacency


def _is_connected(adjacency: np.ndarray) -> bool:
    n_components, _ = connected_components(csr_matrix(adjacency),
                                           directed=False)
    return n_components == 1
