import numpy as np
import pandas as pd
import pytest

from pystocknet.infostats.correlation import correlation_matrix
from pystocknet.ingest.returns_panel import ReturnsPanel
from pystocknet.rmt.eigenvector_components import top_eigenvector_components
from pystocknet.rmt.marchenko_pastur import (
    MPParams, mp_bounds, mp_pdf, mp_probability)
from pystocknet.rmt.spectrum import (
    classify_spectrum, eigen_decompose, orient_vectors, spectrum_histogram,
    spectrum_report)
from pystocknet.rmt.surrogate import surrogate_ensemble, surrogate_shuffle
from pystocknet.synth.generate_returns import generate_returns
from pystocknet.synth.market_spec import MarketSpec, SectorSpec


def _iid_panel(n_days, windows_per_day, n_symbols, seed=0) -> ReturnsPanel:
    days = pd.bdate_range('2014-01-01', periods=n_days)
    offsets = np.timedelta64(9 * 3600 + 30 * 60, 's') + \
        np.arange(1, windows_per_day) * np.timedelta64(30, 's')
    index = pd.DatetimeIndex((days.values[:, None] + offsets[None, :]).ravel())

    rng = np.random.default_rng(seed)
    returns = pd.DataFrame(
        rng.standard_normal((len(index), n_symbols)), index=index,
        columns=[f"SYM{column:03d}" for column in range(n_symbols)])

    return ReturnsPanel(returns=returns, sectors={}, period='all',
                        windows_per_day=windows_per_day)


def _random_correlation(k, m, seed):
    data = np.random.default_rng(seed).standard_normal((m, k))
    rho = np.corrcoef(data, rowvar=False)
    return (rho + rho.T) / 2


@pytest.mark.parametrize('m, expected', [
    (30198, 1.11), (33074, 1.11), (101379, 1.06)])
def test_mp_upper_bound_of_long_panels(m, expected):
    test = mp_bounds(m, 89).lambda_max

    assert expected == pytest.approx(test, abs=0.005)


def test_mp_bounds_collapse_for_infinite_ratio():
    expected = (1.0, 1.0)

    mp = MPParams.from_ratio(np.inf)
    test = (mp.lambda_min, mp.lambda_max)

    assert expected == test


def test_mp_bounds_need_more_observations_than_variables():
    with pytest.raises(ValueError):
        mp_bounds(89, 89)

    with pytest.raises(ValueError):
        mp_bounds(100, 1)


@pytest.mark.parametrize('q_ratio', [50.0, 339.3, 1139.1])
def test_mp_density_integrates_to_one(q_ratio):
    mp = MPParams.from_ratio(q_ratio)

    test = mp_probability(0.0, 10.0, mp)

    assert test == pytest.approx(1.0, abs=1e-6)


def test_mp_density_vanishes_outside_the_support():
    mp = MPParams.from_ratio(4.0)

    test = mp_pdf(np.array([0.0, mp.lambda_min, mp.lambda_max, 3.0]), mp)

    np.testing.assert_array_equal(test, np.zeros(4))
    assert mp_pdf(1.0, mp) > 0


def test_eigen_decompose_identity():
    eigensystem = eigen_decompose(np.eye(3))

    np.testing.assert_allclose(eigensystem.eigenvalues, np.ones(3))
    np.testing.assert_allclose(eigensystem.eigenvectors, np.eye(3),
                               atol=1e-12)


def test_eigen_decompose_two_by_two():
    expected = [1.5, 0.5]

    eigensystem = eigen_decompose([[1.0, 0.5], [0.5, 1.0]])
    test = list(eigensystem.eigenvalues)

    assert expected == pytest.approx(test, abs=1e-12)
    np.testing.assert_allclose(eigensystem.eigenvectors[:, 0],
                               np.ones(2) / np.sqrt(2), atol=1e-12)


def test_eigen_decompose_random_correlation_matrix():
    rho = _random_correlation(k=20, m=60, seed=3)

    values, vectors = eigen_decompose(rho)

    assert values.sum() == pytest.approx(20.0, abs=1e-9)
    assert np.all(np.diff(values) <= 0)
    assert np.max(np.abs(vectors.T @ vectors - np.eye(20))) <= 1e-8
    residual = rho @ vectors - vectors * values
    assert np.max(np.abs(residual)) <= 1e-8 * np.linalg.norm(rho, 2)


def test_eigen_decompose_clamps_tiny_negative_eigenvalues():
    # rank one correlation matrix, eigenvalues 3, 0, 0 up to rounding
    rho = np.ones((3, 3))

    values, _ = eigen_decompose(rho)

    assert np.all(values >= 0)
    assert values[0] == pytest.approx(3.0)


def test_eigen_decompose_rejects_asymmetric_matrix():
    with pytest.raises(ValueError):
        eigen_decompose([[1.0, 0.2], [0.3, 1.0]])


def test_orient_vectors_makes_largest_component_positive():
    expected = np.array([[-0.6, 0.8], [0.8, -0.6]])

    test = orient_vectors(np.array([[0.6, 0.8], [-0.8, -0.6]]))

    np.testing.assert_array_equal(test, expected)


def test_classify_spectrum():
    mp = MPParams.from_ratio(10.0)

    assert classify_spectrum(np.ones(5), mp).frac_within == 1.0
    assert classify_spectrum([mp.lambda_min, mp.lambda_max],
                             mp).frac_within == 1.0

    fractions = classify_spectrum([0.1, 1.0, 1.2, 5.0], mp)
    assert fractions == (0.5, 0.25, 0.25)
    assert sum(fractions) == pytest.approx(1.0)


def test_spectrum_report_document():
    rho = _random_correlation(k=4, m=200, seed=1)

    report = spectrum_report(rho, 200, ['A', 'B', 'C', 'D'], 'pre')
    document = report.to_document()

    assert document['period'] == 'pre'
    assert document['q_ratio'] == 50.0
    assert len(document['eigenvalues']) == 4
    assert sum(document['fractions'].values()) == pytest.approx(1.0)
    assert report.ratio == pytest.approx(
        report.eigenvalues[0] / report.mp.lambda_max)


def test_spectrum_histogram_densities():
    values = eigen_decompose(_random_correlation(k=40, m=400, seed=2))[0]
    mp = mp_bounds(400, 40)

    histogram = spectrum_histogram(values, mp, bins=20)
    widths = histogram['bin_right'] - histogram['bin_left']

    assert list(histogram.columns) == [
        'bin_left', 'bin_right', 'empirical_density', 'mp_density']
    assert len(histogram) == 20
    assert (histogram['empirical_density'] * widths).sum() == pytest.approx(
        1.0)
    assert (histogram['mp_density'] * widths).sum() == pytest.approx(
        1.0, abs=1e-6)


def test_surrogate_shuffle_keeps_every_column_multiset():
    panel = _iid_panel(2, 30, 4, seed=5)

    shuffled = surrogate_shuffle(panel, seed=9, trial=2)

    np.testing.assert_array_equal(np.sort(shuffled.matrix, axis=0),
                                  np.sort(panel.matrix, axis=0))
    assert not np.array_equal(shuffled.matrix, panel.matrix)
    assert shuffled.symbols == panel.symbols


def test_surrogate_ensemble_is_deterministic():
    panel = _iid_panel(2, 60, 5, seed=6)

    expected = surrogate_ensemble(panel, trials=3, seed=4)
    test = surrogate_ensemble(panel, trials=3, seed=4)

    np.testing.assert_array_equal(expected.eigenvalues, test.eigenvalues)
    assert expected.eigenvalues.shape == (3, 5)
    assert len(expected.histogram(bins=10)) == 10


def test_surrogate_ensemble_of_iid_panel_follows_mp_law():
    panel = _iid_panel(42, 720, 89, seed=7)

    ensemble = surrogate_ensemble(panel, trials=50, seed=0)

    assert panel.n_observations == 30198
    assert ensemble.pooled_eigenvalues.size == 50 * 89
    assert ensemble.pooled_frac_within >= 0.99


def test_planted_sectors_rise_above_the_mp_edge():
    spec = MarketSpec(
        sectors=[SectorSpec(f"Sector{index}", size, 0.4)
                 for index, size in enumerate([15, 15, 15, 15, 15, 14])],
        market_beta=0.3, days=42, seed=1)
    panel = generate_returns(spec)

    report = spectrum_report(correlation_matrix(panel).rho,
                             panel.n_observations, panel.symbols, 'all')

    assert panel.n_observations == 30198
    assert report.eigenvalues[0] >= 3 * report.mp.lambda_max
    assert np.sum(report.eigenvalues > report.mp.lambda_max) >= 2


def test_top_eigenvector_components():
    rho = _random_correlation(k=5, m=100, seed=8)
    report = spectrum_report(rho, 100, ['A', 'B', 'C', 'D', 'E'], 'all')
    sectors = {'A': 'Pharma', 'B': 'Banks', 'C': 'Pharma', 'D': 'Banks'}

    table = top_eigenvector_components(report, 3, sectors)

    assert list(table.columns) == ['symbol', 'sector', 'ev1', 'ev2', 'ev3']
    assert list(table['symbol']) == ['B', 'D', 'A', 'C', 'E']
    assert list(table['sector']) == ['Banks', 'Banks', 'Pharma', 'Pharma',
                                     'UNKNOWN']
    for column in ('ev1', 'ev2', 'ev3'):
        assert (table[column] ** 2).sum() == pytest.approx(1.0, abs=1e-9)

    with pytest.raises(ValueError):
        top_eigenvector_components(report, 6, sectors)
