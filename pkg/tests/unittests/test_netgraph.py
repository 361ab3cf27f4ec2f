import networkx as nx
import numpy as np
import pytest

from pystocknet import constants as c
from pystocknet.infostats.correlation import correlation_matrix
from pystocknet.netgraph.degree_distribution import (
    degree_distribution, fitted_pmf, powerlaw_log_likelihood, powerlaw_mle,
    powerlaw_summary)
from pystocknet.netgraph.export_graph import export_graph, read_graph
from pystocknet.netgraph.graph_class import (
    SpanningTree, WeightedGraph, graph_from_distances)
from pystocknet.netgraph.hub_report import HUB_COLUMNS, hub_neighborhood_report
from pystocknet.netgraph.mst_prim import mst_prim
from pystocknet.netgraph.spectral_centrality import (
    adjacency_matrix, centrality_report, fiedler_communities,
    laplacian_matrix, perron_scores)
from pystocknet.synth.block_graph import generate_block_adjacency
from pystocknet.synth.generate_returns import generate_returns
from pystocknet.synth.market_spec import MarketSpec, SectorSpec


def _symbols(n_nodes):
    return [f"N{node}" for node in range(n_nodes)]


def _tree(edges, n_nodes, sectors=None) -> SpanningTree:
    return SpanningTree(symbols=_symbols(n_nodes), sectors=sectors or {},
                        edges=[(i, j, 1.0) for i, j in edges])


def _star(n_nodes, sectors=None) -> SpanningTree:
    return _tree([(0, node) for node in range(1, n_nodes)], n_nodes, sectors)


def _path(n_nodes) -> SpanningTree:
    return _tree([(node, node + 1) for node in range(n_nodes - 1)], n_nodes)


def _random_graph(rng) -> WeightedGraph:
    n_nodes = int(rng.integers(5, 16))
    # random spanning path keeps the graph connected
    order = rng.permutation(n_nodes)
    pairs = {tuple(sorted((int(a), int(b))))
             for a, b in zip(order[:-1], order[1:])}
    for i in range(n_nodes):
        for j in range(i + 1, n_nodes):
            if rng.random() < 0.4:
                pairs.add((i, j))

    edges = [(i, j, float(rng.integers(1, 21))) for i, j in sorted(pairs)]
    return WeightedGraph(symbols=_symbols(n_nodes), edges=edges)


def _to_networkx(graph: WeightedGraph) -> nx.Graph:
    nx_graph = nx.Graph()
    nx_graph.add_nodes_from(range(graph.n_nodes))
    nx_graph.add_weighted_edges_from(graph.edges)
    return nx_graph


def test_mst_of_weighted_triangle():
    expected = [(0, 1, 1.0), (1, 2, 2.0)]

    graph = graph_from_distances(
        [[0, 1, 3], [1, 0, 2], [3, 2, 0]], ['A', 'B', 'C'])
    tree = mst_prim(graph)

    assert expected == tree.edges
    assert tree.total_weight == 3.0


def test_mst_of_uniform_complete_graph_is_star_at_node_zero():
    expected = [(0, 1, 1.0), (0, 2, 1.0), (0, 3, 1.0), (0, 4, 1.0)]

    distances = np.ones((5, 5)) - np.eye(5)
    test = mst_prim(graph_from_distances(distances, _symbols(5))).edges

    assert expected == test


def test_mst_weight_matches_kruskal_on_random_graphs():
    rng = np.random.default_rng(21)

    for _ in range(1000):
        graph = _random_graph(rng)
        expected = nx.minimum_spanning_tree(
            _to_networkx(graph), algorithm='kruskal').size(weight='weight')

        tree = mst_prim(graph)

        assert expected == tree.total_weight
        assert tree.n_edges == graph.n_nodes - 1


def test_mst_satisfies_the_cut_property():
    rng = np.random.default_rng(22)

    for _ in range(50):
        graph = _random_graph(rng)
        tree = mst_prim(graph)
        for i, j, weight in tree.edges:
            forest = _to_networkx(tree)
            forest.remove_edge(i, j)
            side = nx.node_connected_component(forest, i)
            crossing = [w for a, b, w in graph.edges
                        if (a in side) != (b in side)]
            assert weight <= min(crossing)


def test_mst_of_disconnected_graph_raises():
    graph = WeightedGraph(symbols=_symbols(4),
                          edges=[(0, 1, 1.0), (2, 3, 1.0)])

    with pytest.raises(ValueError):
        mst_prim(graph)


def test_graph_from_distances_validation():
    with pytest.raises(ValueError):
        graph_from_distances([[0, 1], [2, 0]], ['A', 'B'])

    with pytest.raises(ValueError):
        graph_from_distances([[1, 1], [1, 1]], ['A', 'B'])

    with pytest.raises(ValueError):
        graph_from_distances([[0, 1], [1, 0]], ['A', 'B', 'C'])


def test_spanning_tree_validation():
    with pytest.raises(ValueError):
        SpanningTree(symbols=_symbols(3), edges=[(0, 1, 1.0)])

    with pytest.raises(ValueError):
        WeightedGraph(symbols=_symbols(3), edges=[(1, 0, 1.0)])


def test_degrees_of_a_path():
    expected = [1, 2, 2, 2, 1]

    test = list(_path(5).degrees())

    assert expected == test


def test_degrees_of_a_star():
    degrees = _star(89).degrees()

    assert degrees[0] == 88
    assert degrees.sum() == 2 * 88


def test_powerlaw_mle_uncorrected():
    expected = 1 + 5 / (3 * np.log(2))

    test = powerlaw_mle([1, 1, 1, 2, 4], corrected=False)

    assert expected == pytest.approx(test, abs=1e-12)
    assert test == pytest.approx(3.4045, abs=1e-4)


def test_powerlaw_mle_corrected_for_all_leaves():
    expected = 2.4427

    test = powerlaw_mle(np.ones(10))

    assert expected == pytest.approx(test, abs=1e-4)


def test_powerlaw_mle_errors():
    with pytest.raises(ValueError):
        powerlaw_mle(np.ones(10), corrected=False)

    with pytest.raises(ValueError):
        powerlaw_mle([0, 1, 2])

    with pytest.raises(ValueError):
        powerlaw_mle([])


def test_degree_distribution_of_two_node_tree():
    distribution = degree_distribution(_path(2))

    assert np.isnan(distribution.alpha_hat_uncorrected)
    assert distribution.alpha_hat == pytest.approx(1 + 1 / np.log(2))
    assert distribution.hubs == []


def test_degree_distribution_hubs_and_histogram():
    distribution = degree_distribution(_star(7), hub_threshold=4)
    histogram = distribution.histogram()

    assert distribution.hubs == [0]
    assert list(histogram['degree']) == [1, 2, 3, 4, 5, 6]
    assert list(histogram['count']) == [6, 0, 0, 0, 0, 1]
    assert histogram['empirical_pmf'].sum() == pytest.approx(1.0)


def test_fitted_pmf_sums_to_one():
    test = fitted_pmf(np.arange(1, 200000), 2.5).sum()

    assert test == pytest.approx(1.0, abs=1e-4)


def _grid_maximizer(degrees):
    coarse = np.arange(1.01, 6.0 + 1e-9, 0.01)
    best = max(coarse, key=lambda alpha: powerlaw_log_likelihood(alpha,
                                                                 degrees))
    fine = np.arange(max(1.0001, best - 0.01), min(6.0, best + 0.01), 1e-4)
    return max(fine, key=lambda alpha: powerlaw_log_likelihood(alpha, degrees))


def test_powerlaw_mle_matches_grid_search():
    rng = np.random.default_rng(31)

    for _ in range(100):
        degrees = np.minimum(rng.zipf(2.2, size=int(rng.integers(10, 90))),
                             40)
        degrees[0] = 2

        assert powerlaw_mle(degrees) == pytest.approx(
            _grid_maximizer(degrees), abs=1e-3)


def test_powerlaw_exponent_of_synthetic_market_tree():
    spec = MarketSpec(
        sectors=[SectorSpec(f"Sector{index}", size, 0.4)
                 for index, size in enumerate([15, 15, 15, 15, 15, 14])],
        market_beta=0.3, days=2, seed=4)
    panel = generate_returns(spec)
    pairs = correlation_matrix(panel)

    tree = mst_prim(graph_from_distances(pairs.d_corr, pairs.symbols,
                                         panel.sectors))
    test = degree_distribution(tree).alpha_hat

    assert tree.n_nodes == 89
    assert 1.5 <= test <= 3.0


def test_powerlaw_summary_columns():
    summary = powerlaw_summary({('pre', 'corr'): degree_distribution(
        _star(6))})

    assert list(summary.iloc[0][['period', 'method', 'nodes', 'max_degree',
                                 'hubs']]) == ['pre', 'corr', 6, 5, 1]


def test_adjacency_and_laplacian_of_paths():
    np.testing.assert_array_equal(adjacency_matrix(_path(2)),
                                  [[0, 1], [1, 0]])

    eigenvalues = np.linalg.eigvalsh(laplacian_matrix(adjacency_matrix(
        _path(3))))
    np.testing.assert_allclose(eigenvalues, [0, 1, 3], atol=1e-12)


def test_perron_scores_of_star():
    expected = [1 / 3] + 4 * [1 / 6]

    test = perron_scores(adjacency_matrix(_star(5)))

    np.testing.assert_allclose(test, expected, atol=1e-8)


def test_perron_scores_of_single_edge_and_scaling():
    np.testing.assert_allclose(perron_scores([[0, 1], [1, 0]]), [0.5, 0.5],
                               atol=1e-12)

    adjacency = adjacency_matrix(_path(6))
    np.testing.assert_allclose(perron_scores(2 * adjacency),
                               perron_scores(adjacency), atol=1e-12)


def test_perron_scores_of_disconnected_graph_raise():
    with pytest.raises(ValueError):
        perron_scores(generate_block_adjacency([3, 3], bridges=0))


def test_fiedler_split_of_three_node_path():
    split = fiedler_communities(laplacian_matrix(adjacency_matrix(_path(3))))

    assert split.community[1] == 0
    assert split.community[0] != split.community[2]
    assert abs(split.fiedler_vector.sum()) <= 1e-8
    assert np.linalg.norm(split.fiedler_vector) == pytest.approx(1.0)


def test_fiedler_split_flags_repeated_connectivity(caplog):
    cycle = np.roll(np.eye(6), 1, axis=1)
    cycle = cycle + cycle.T

    split = fiedler_communities(laplacian_matrix(cycle))

    assert split.degenerate
    assert set(split.community) == {0, 1}
    assert "repeated" in caplog.text


def test_fiedler_split_of_star_is_degenerate_and_path_is_not():
    star = fiedler_communities(laplacian_matrix(adjacency_matrix(_star(5))))
    path = fiedler_communities(laplacian_matrix(adjacency_matrix(_path(3))))

    assert star.degenerate
    assert not path.degenerate


def test_fiedler_split_recovers_planted_blocks():
    split = fiedler_communities(laplacian_matrix(
        generate_block_adjacency([5, 5], bridges=1)))

    assert len(set(split.community[:5])) == 1
    assert len(set(split.community[5:])) == 1
    assert split.community[0] != split.community[5]


def test_fiedler_split_of_disconnected_graph_raises():
    with pytest.raises(ValueError):
        fiedler_communities(laplacian_matrix(
            generate_block_adjacency([4, 4], bridges=0)))


def test_block_adjacency_validation():
    with pytest.raises(ValueError):
        generate_block_adjacency([1, 3], bridges=2)


def test_centrality_frame_is_sorted_by_perron_score():
    tree = _star(5, sectors={'N0': 'Banks'})

    table = centrality_report(tree).frame(tree)

    assert list(table.columns) == ['symbol', 'sector', 'degree', 'perron_pct',
                                   'fiedler', 'community']
    assert table['symbol'][0] == 'N0'
    assert table['perron_pct'][0] == pytest.approx(33.33)
    assert table['sector'][1] == c.UNKNOWN_SECTOR


def test_hub_report_of_planted_star():
    tree = _star(7, sectors={symbol: 'Banks' for symbol in _symbols(7)})

    report = hub_neighborhood_report(tree, centrality_report(tree))

    assert len(report) == 1
    assert report['hub'][0] == 'N0'
    assert report['degree'][0] == 6
    assert report['same_sector_fraction'][0] == 1.0
    assert report['neighbors'][0] == 'N1;N2;N3;N4;N5;N6'


def test_hub_report_without_hubs_is_empty():
    tree = _path(6)

    report = hub_neighborhood_report(tree, centrality_report(tree))

    assert report.empty
    assert list(report.columns) == HUB_COLUMNS


@pytest.mark.parametrize('export_format', [c.EXPORT_FORMAT_GRAPHML,
                                           c.EXPORT_FORMAT_GEXF])
def test_export_graph_round_trip(export_format):
    tree = _star(6, sectors={'N0': 'Banks', 'N1': 'Energy'})

    content = export_graph(tree, export_format,
                           metadata={'period': 'pre', 'method': 'mi'})
    graph = read_graph(content, export_format)

    assert graph.number_of_nodes() == 6
    assert graph.number_of_edges() == 5
    assert graph.nodes['N0']['sector'] == 'Banks'
    assert graph.nodes['N2']['sector'] == c.UNKNOWN_SECTOR
    assert int(graph.nodes['N0']['degree']) == 5


def test_export_graph_rejects_unknown_format():
    with pytest.raises(ValueError):
        export_graph(_star(3), 'dot')

    with pytest.raises(ValueError):
        read_graph(b'', 'dot')
