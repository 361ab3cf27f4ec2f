from .graph_class import SpanningTree, WeightedGraph, graph_from_distances
from .mst_prim import mst_prim
from .degree_distribution import (
    DegreeDistribution, degree_distribution, fitted_pmf, powerlaw_mle,
    powerlaw_summary)
from .spectral_centrality import (
    CentralityReport, adjacency_matrix, centrality_report,
    fiedler_communities, laplacian_matrix, perron_scores)
from .hub_report import hub_neighborhood_report
from .export_graph import export_graph, read_graph
