import io
from decimal import Decimal

import numpy as np
import pytest

from pystocknet import constants as c
from pystocknet.infostats.correlation import correlation_matrix
from pystocknet.infostats.entropy import normalized_mi
from pystocknet.infostats.mutual_information import adaptive_partition
from pystocknet.ingest.bar_series import build_all_bars
from pystocknet.ingest.parse_ticks import parse_ticks, read_symbol_metadata
from pystocknet.ingest.returns_panel import compute_log_returns
from pystocknet.settings_pystocknet import PystocknetSettings, SessionSettings
from pystocknet.synth.generate_returns import (
    generate_returns, standardized_returns)
from pystocknet.synth.generate_ticks import (
    generate_metadata, generate_ticks, synthetic_prices)
from pystocknet.synth.market_spec import CouplingSpec, MarketSpec, SectorSpec

# ten 30 s windows per day
SHORT_SESSION = {c.KEY_SESSION_OPEN: '09:30:00',
                 c.KEY_SESSION_CLOSE: '09:35:00',
                 c.KEY_SESSION_BAR_WIDTH: 30}


def _spec(sizes=(3, 2), intra=0.5, beta=0.3, days=3, seed=0, **kwargs):
    return MarketSpec(
        sectors=[SectorSpec(f"Sector{index}", size, intra)
                 for index, size in enumerate(sizes)],
        market_beta=beta, days=days, seed=seed,
        session=SessionSettings(SHORT_SESSION), **kwargs)


def _ingest(content: bytes, session: SessionSettings):
    ticks = parse_ticks(io.BytesIO(content), session)
    bars, _ = build_all_bars(ticks, session)
    return compute_log_returns(bars, session)


def _nmi(x, y) -> float:
    partition = adaptive_partition(x, y)
    hx, hy, hxy = partition.entropies()
    return normalized_mi(min(max(hx + hy - hxy, 0.0), hxy), hx, hy)


def test_market_spec_validation():
    with pytest.raises(ValueError):
        _spec(beta=1.0)

    with pytest.raises(ValueError):
        _spec(intra=0.05, beta=0.3)

    with pytest.raises(ValueError):
        _spec(sizes=())

    with pytest.raises(ValueError):
        _spec(drop_probability=1.0)

    with pytest.raises(ValueError):
        _spec(nonlinear_pairs=[CouplingSpec(0, 0, c.COUPLING_SQUARE)])

    with pytest.raises(ValueError):
        _spec(nonlinear_pairs=[CouplingSpec(0, 1, 'cube')])

    with pytest.raises(ValueError):
        _spec(nonlinear_pairs=[CouplingSpec(0, 1, c.COUPLING_SQUARE),
                               CouplingSpec(1, 2, c.COUPLING_SINE)])


def test_market_spec_symbols_and_ground_truth():
    spec = _spec(nonlinear_pairs=[{'i': 0, 'j': 4, 'form': 'square'}])

    truth = spec.ground_truth()

    assert spec.symbols == ['SYM000', 'SYM001', 'SYM002', 'SYM003', 'SYM004']
    assert truth['sectors'] == {'Sector0': ['SYM000', 'SYM001', 'SYM002'],
                                'Sector1': ['SYM003', 'SYM004']}
    assert truth['nonlinear_pairs'] == [
        {'i': 'SYM000', 'j': 'SYM004', 'form': 'square'}]
    assert truth['trading_days'] == ['2014-01-01', '2014-01-02', '2014-01-03']
    assert truth['windows_per_day'] == 10


def test_market_spec_from_settings():
    settings = PystocknetSettings({
        'seed': 5,
        'session': SHORT_SESSION,
        'synth': {'days': 2, 'market_beta': 0.2,
                  'sectors': [{'name': 'Banks', 'size': 4,
                               'intra_correlation': 0.5}],
                  'nonlinear_pairs': [{'i': 0, 'j': 3, 'form': 'sine'}]}})

    spec = MarketSpec.from_settings(settings)

    assert (spec.seed, spec.days, spec.n_symbols) == (5, 2, 4)
    assert spec.nonlinear_pairs == [CouplingSpec(0, 3, c.COUPLING_SINE)]
    assert spec.windows_per_day == 10


def test_implied_correlation_of_factor_model():
    expected = np.array([[1.0, 0.5, 0.09], [0.5, 1.0, 0.09],
                         [0.09, 0.09, 1.0]])

    test = _spec(sizes=(2, 1)).implied_correlation()

    np.testing.assert_allclose(test, expected, atol=1e-12)


def test_generated_panel_row_count():
    spec = MarketSpec(sectors=[SectorSpec('Banks', 2, 0.5)],
                      market_beta=0.0, days=42)

    panel = generate_returns(spec)

    assert panel.n_observations == 30198
    assert panel.returns.index[0].strftime('%H:%M:%S') == '09:30:30'


def test_intra_sector_correlation_is_recovered():
    spec = MarketSpec(sectors=[SectorSpec('Banks', 4, 0.5)],
                      market_beta=0.0, days=140, seed=2)

    rho = correlation_matrix(generate_returns(spec)).rho
    off_diagonal = rho[np.triu_indices(4, k=1)]

    assert spec.days * (spec.windows_per_day - 1) >= 10 ** 5
    np.testing.assert_allclose(off_diagonal, 0.5, atol=0.02)


def test_independent_market_is_uncorrelated():
    spec = _spec(sizes=(6,), intra=0.0, beta=0.0, days=160, seed=3)

    panel = generate_returns(spec)
    rho = correlation_matrix(panel).rho

    bound = 4 / np.sqrt(panel.n_observations)
    assert np.all(np.abs(rho[np.triu_indices(6, k=1)]) < bound)


def test_square_coupling_is_invisible_to_correlation_only():
    spec = MarketSpec(sectors=[SectorSpec('Banks', 2, 0.0)], market_beta=0.0,
                      days=140, seed=6,
                      nonlinear_pairs=[CouplingSpec(0, 1, c.COUPLING_SQUARE)])

    returns = standardized_returns(spec)
    x, y = returns[:, 0], returns[:, 1]

    assert abs(np.corrcoef(x, y)[0, 1]) < 0.05
    assert _nmi(x, y) > 0.2


def test_sine_coupling_is_standardized():
    spec = MarketSpec(sectors=[SectorSpec('Banks', 2, 0.0)], market_beta=0.0,
                      days=3, seed=6,
                      nonlinear_pairs=[CouplingSpec(0, 1, c.COUPLING_SINE)])

    y = standardized_returns(spec)[:, 1]

    assert y.mean() == pytest.approx(0.0, abs=1e-12)
    assert y.std() == pytest.approx(1.0, abs=1e-12)


def test_linear_pair_is_visible_to_correlation_and_nmi():
    correlations, nmis = [], []
    for seed in range(5):
        # 60 days of 9 returns, the first 500 of them
        spec = _spec(sizes=(2,), intra=0.8, beta=0.0, days=60, seed=seed)
        returns = standardized_returns(spec)[:500]
        correlations.append(np.corrcoef(returns[:, 0], returns[:, 1])[0, 1])
        nmis.append(_nmi(returns[:, 0], returns[:, 1]))

    assert np.median(correlations) > 0.7
    assert np.median(nmis) > 0.15


def test_generated_ticks_reproduce_generated_returns():
    spec = _spec(days=3, seed=8)

    panel = _ingest(generate_ticks(spec), spec.session)

    assert panel.symbols == spec.symbols
    np.testing.assert_allclose(panel.matrix, generate_returns(spec).matrix,
                               rtol=0, atol=1e-9)


def test_generated_ticks_one_trade_per_window():
    spec = _spec(days=2)

    lines = generate_ticks(spec).decode('utf-8').splitlines()

    assert lines[0] == 'timestamp,symbol,price,volume'
    assert len(lines) - 1 == spec.days * spec.windows_per_day * spec.n_symbols
    assert lines[1].startswith('2014-01-01T09:30:15,SYM000,')


def test_skipped_window_is_forward_filled():
    spec = _spec(days=1, seed=9)
    expected = generate_returns(spec).matrix[:, 0]

    panel = _ingest(generate_ticks(spec, skip_windows=[('SYM000', 3)]),
                    spec.session)
    test = panel.matrix[:, 0]

    assert test[2] == 0.0
    assert test[3] == pytest.approx(expected[2] + expected[3], abs=1e-9)
    assert panel.filled_counts['SYM000'].tolist() == [1]


def test_price_scale_does_not_change_returns():
    spec = _spec(days=2, seed=10)

    low = synthetic_prices(spec, price_scale=1.0)
    high = synthetic_prices(spec, price_scale=5000.0)

    assert low[0, 0] == pytest.approx(1.0)
    np.testing.assert_allclose(np.diff(np.log(low), axis=0),
                               np.diff(np.log(high), axis=0), atol=1e-12)


def test_drop_probability_leaves_windows_without_trades():
    spec = _spec(days=2, drop_probability=0.3)

    lines = generate_ticks(spec).decode('utf-8').splitlines()
    n_windows = spec.days * spec.windows_per_day * spec.n_symbols

    assert 0.5 * n_windows < len(lines) - 1 < 0.9 * n_windows


def test_generated_ticks_are_deterministic_under_seed():
    expected = generate_ticks(_spec(seed=11))

    test = generate_ticks(_spec(seed=11))

    assert expected == test
    assert expected != generate_ticks(_spec(seed=12))


def test_generated_metadata_lists_sectors():
    spec = _spec(sizes=(1, 2))

    test = read_symbol_metadata(io.BytesIO(generate_metadata(spec)))

    assert test == {'SYM000': 'Sector0', 'SYM001': 'Sector1',
                    'SYM002': 'Sector1'}


def test_generated_prices_are_plain_decimals():
    spec = _spec(days=1, seed=13)
    expected = synthetic_prices(spec)

    lines = generate_ticks(spec).decode('utf-8').splitlines()[1:]
    test = [Decimal(line.split(',')[2]) for line in lines]

    assert all(not line.split(',')[2].startswith('np') for line in lines)
    assert float(test[0]) == pytest.approx(expected[0, 0], abs=1e-10)
