import copy
import datetime
import hashlib
import json
from typing import Any, Dict, List, Optional, Union

import pandas as pd

from pystocknet import constants as c


class PystocknetSettings:
    """A class to store all settings required to run pystocknet.

    Attributes
    ----------
    mode : str
        Select which pipeline stage to execute. Valid modes are "ingest",
        "pairs", "rmt", "network", "synth" and "report" (which runs ingest,
        pairs, rmt and network in sequence).
    seed : int
        Master seed. Every random stream in the pipeline is derived from it.
    strict : bool
        If True, a malformed tick row aborts ingestion. Otherwise the row is
        skipped and reported in the log.
    output_dir : str
        Root directory for all stage outputs.
    input : InputSettings
        Instance of class InputSettings containing input file paths.
    session : SessionSettings
        Instance of class SessionSettings containing the trading session,
        bar width and analysis periods.
    estimator : EstimatorSettings
        Instance of class EstimatorSettings containing the mutual information
        estimator and permutation test settings.
    rmt : RmtSettings
        Instance of class RmtSettings.
    network : NetworkSettings
        Instance of class NetworkSettings.
    synth : SynthSettings
        Instance of class SynthSettings describing the synthetic market.

    """

    def __init__(self, settings: Union[str, dict]):
        """Initialize settings class.

        Parameters
        ----------
        settings : Union[str, dict]
            Either a .json string or a dictionary containing the settings
            parameters. See settings_example.json for an example. Missing
            sections fall back to their defaults.

        """
        if isinstance(settings, str):
            tmp = json.loads(settings)
        else:
            tmp = copy.deepcopy(settings)

        self._raw = tmp

        self.mode = tmp.get(c.KEY_PARAM_MODE, c.MODE_REPORT)
        if self.mode not in c.VALID_MODES:
            raise ValueError(
                f"Unknown mode {self.mode!r}. Valid modes: "
                f"{', '.join(c.VALID_MODES)}")

        self.seed = int(tmp.get(c.KEY_PARAM_SEED, 0))
        self.strict = bool(tmp.get(c.KEY_PARAM_STRICT, False))
        self.output_dir = tmp.get(c.KEY_PARAM_OUTPUT_DIR, 'output')
        self.input = InputSettings(tmp.get(c.KEY_PARAM_INPUT, {}))
        self.session = SessionSettings(tmp.get(c.KEY_PARAM_SESSION, {}))
        self.estimator = EstimatorSettings(tmp.get(c.KEY_PARAM_ESTIMATOR, {}))
        self.rmt = RmtSettings(tmp.get(c.KEY_PARAM_RMT, {}))
        self.network = NetworkSettings(tmp.get(c.KEY_PARAM_NETWORK, {}))
        self.synth = SynthSettings(tmp.get(c.KEY_PARAM_SYNTH, {}))

    def override(self, **kwargs) -> None:
        """Override top level settings, e.g. from command line flags.

        Keyword arguments with value None are ignored.

        """
        for key, value in kwargs.items():
            if value is None:
                continue
            if key not in (c.KEY_PARAM_SEED, c.KEY_PARAM_STRICT,
                           c.KEY_PARAM_OUTPUT_DIR, c.KEY_PARAM_MODE):
                raise ValueError(f"Setting {key!r} cannot be overridden")
            self._raw[key] = value
            setattr(self, key, value)

    def to_dict(self) -> Dict[str, Any]:
        """Return the effective settings as a plain dictionary."""
        return copy.deepcopy(self._raw)

    def config_hash(self) -> str:
        """SHA-256 of the canonical JSON form of the effective settings.

        The mode and output directory are excluded, so that every stage of
        one configuration shares a hash and moving the output tree does not
        change the files in it.

        """
        raw = {key: value for key, value in self._raw.items()
               if key not in (c.KEY_PARAM_MODE, c.KEY_PARAM_OUTPUT_DIR)}
        canonical = json.dumps(raw, sort_keys=True, separators=(',', ':'))
        return hashlib.sha256(canonical.encode('utf-8')).hexdigest()


class InputSettings:
    """Paths to the raw input files.

    Attributes
    ----------
    tick_file : str, optional
        Path to the tick CSV (header timestamp,symbol,price,volume).
    metadata_file : str, optional
        Path to the symbol metadata CSV (header symbol,sector).

    """

    def __init__(self, inp: dict):
        self.tick_file: Optional[str] = inp.get(c.KEY_INPUT_TICK_FILE)
        self.metadata_file: Optional[str] = inp.get(c.KEY_INPUT_METADATA_FILE)


class SessionSettings:
    """Trading session, bar grid and analysis periods.

    Attributes
    ----------
    session_open : datetime.time
        Wall-clock session start (inclusive).
    session_close : datetime.time
        Wall-clock session end (exclusive).
    bar_width : int
        Bar width in seconds.
    trading_days : List[datetime.date]
        Ordered trading days. If empty, the trading days are inferred from
        the dates present in the tick data.
    period_boundaries : List[Period]
        Named, disjoint and ordered date ranges. If empty, a single period
        named "all" covers every trading day.
    max_empty_fraction : float
        A symbol is dropped from all periods if its fraction of forward-filled
        windows exceeds this value in any period.

    Raises
    ------
    ValueError
        If session_close is not after session_open, if the session length is
        not a whole number of bars, or if the periods overlap or are out of
        order.

    """

    def __init__(self, session: dict):
        self.session_open = _parse_time(
            session.get(c.KEY_SESSION_OPEN, c.DEFAULT_SESSION_OPEN))
        self.session_close = _parse_time(
            session.get(c.KEY_SESSION_CLOSE, c.DEFAULT_SESSION_CLOSE))
        self.bar_width = int(session.get(c.KEY_SESSION_BAR_WIDTH,
                                         c.DEFAULT_BAR_WIDTH))
        self.trading_days = [
            _parse_date(day)
            for day in session.get(c.KEY_SESSION_TRADING_DAYS, [])]
        self.period_boundaries = [
            Period(period)
            for period in session.get(c.KEY_SESSION_PERIOD_BOUNDARIES, [])]
        self.max_empty_fraction = float(session.get(
            c.KEY_SESSION_MAX_EMPTY_FRACTION, c.DEFAULT_MAX_EMPTY_FRACTION))

        self._validate()

    def _validate(self):
        if self.bar_width <= 0:
            raise ValueError(f"bar_width must be positive, got {self.bar_width}")

        length = self.session_seconds
        if length <= 0:
            raise ValueError(
                f"session_close ({self.session_close}) must be after "
                f"session_open ({self.session_open})")

        if length % self.bar_width:
            raise ValueError(
                f"Session length {length} s is not a multiple of the bar "
                f"width {self.bar_width} s")

        if self.trading_days != sorted(set(self.trading_days)):
            raise ValueError("trading_days must be ordered and unique")

        for previous, current in zip(self.period_boundaries,
                                     self.period_boundaries[1:]):
            if current.start <= previous.end:
                raise ValueError(
                    f"Periods {previous.name!r} and {current.name!r} overlap "
                    "or are out of order")

        if not 0 <= self.max_empty_fraction <= 1:
            raise ValueError(
                "max_empty_fraction must be in [0, 1], got "
                f"{self.max_empty_fraction}")

    @property
    def session_seconds(self) -> int:
        """Session length in seconds."""
        start = datetime.datetime.combine(datetime.date.min, self.session_open)
        stop = datetime.datetime.combine(datetime.date.min, self.session_close)
        return int((stop - start).total_seconds())

    @property
    def windows_per_day(self) -> int:
        """Number of bars in one trading day."""
        return self.session_seconds // self.bar_width

    def window_starts(self, day: datetime.date) -> pd.DatetimeIndex:
        """Start instants of every bar of a trading day."""
        start = pd.Timestamp(datetime.datetime.combine(day, self.session_open))
        return pd.date_range(start=start, periods=self.windows_per_day,
                             freq=pd.Timedelta(seconds=self.bar_width))

    def periods_or_default(self, days: List[datetime.date]) -> List['Period']:
        """Configured periods, or one period spanning the given days."""
        if self.period_boundaries:
            return self.period_boundaries

        return [Period({c.KEY_PERIOD_NAME: c.DEFAULT_PERIOD_NAME,
                        c.KEY_PERIOD_START: str(min(days)),
                        c.KEY_PERIOD_END: str(max(days))})]


class Period:
    """A named, inclusive date range.

    Attributes
    ----------
    name : str
        Period label, e.g. "pre_event".
    start : datetime.date
        First calendar date of the period.
    end : datetime.date
        Last calendar date of the period.

    """

    def __init__(self, period: dict):
        self.name = str(period[c.KEY_PERIOD_NAME])
        self.start = _parse_date(period[c.KEY_PERIOD_START])
        self.end = _parse_date(period[c.KEY_PERIOD_END])

        if self.end < self.start:
            raise ValueError(f"Period {self.name!r} ends before it starts")

    def contains(self, day: datetime.date) -> bool:
        return self.start <= day <= self.end


class EstimatorSettings:
    """Mutual information estimator and permutation test settings.

    Attributes
    ----------
    bins_rule : str
        Rule for the number of equiprobable bins per axis. "sqrt_n_over_5"
        gives E = max(2, floor(sqrt(N / 5))), "cube_root" gives
        E = max(2, floor(N ** (1 / 3))).
    bias_correction : str
        "grassberger" applies the finite-count entropy correction to every
        cell, "none" uses the plain plug-in estimate.
    permutation_trials : int
        Number of shuffles in the significance test, at least 99.
    alpha : float
        Significance level in (0, 1].
    n_jobs : int
        Number of joblib workers for the pair sweep.

    """

    def __init__(self, est: dict):
        self.bins_rule = est.get(c.KEY_ESTIMATOR_BINS_RULE, c.DEFAULT_BINS_RULE)
        self.bias_correction = est.get(c.KEY_ESTIMATOR_BIAS_CORRECTION,
                                       c.DEFAULT_BIAS_CORRECTION)
        self.permutation_trials = int(est.get(
            c.KEY_ESTIMATOR_PERMUTATION_TRIALS, c.DEFAULT_PERMUTATION_TRIALS))
        self.alpha = float(est.get(c.KEY_ESTIMATOR_ALPHA, c.DEFAULT_ALPHA))
        self.n_jobs = int(est.get(c.KEY_ESTIMATOR_N_JOBS, c.DEFAULT_N_JOBS))

        if self.bins_rule not in c.VALID_BINS_RULES:
            raise ValueError(
                f"bins_rule {self.bins_rule!r} not understood. Choose one of "
                f"{', '.join(c.VALID_BINS_RULES)}")

        if self.bias_correction not in c.VALID_BIAS_CORRECTIONS:
            raise ValueError(
                f"bias_correction {self.bias_correction!r} not understood. "
                f"Choose one of {', '.join(c.VALID_BIAS_CORRECTIONS)}")

        if self.permutation_trials < c.MIN_PERMUTATION_TRIALS:
            raise ValueError(
                f"permutation_trials must be at least "
                f"{c.MIN_PERMUTATION_TRIALS}, got {self.permutation_trials}")

        if not 0 < self.alpha <= 1:
            raise ValueError(f"alpha must be in (0, 1], got {self.alpha}")


class RmtSettings:
    """Random matrix analysis settings.

    Attributes
    ----------
    surrogate_trials : int
        Number of shuffled surrogate panels in the validation ensemble.
    histogram_bins : int
        Number of uniform bins in the eigenvalue density overlays.
    n_top_eigenvectors : int
        Number of leading eigenvectors reported per symbol.

    """

    def __init__(self, rmt: dict):
        self.surrogate_trials = int(rmt.get(c.KEY_RMT_SURROGATE_TRIALS,
                                            c.DEFAULT_SURROGATE_TRIALS))
        self.histogram_bins = int(rmt.get(c.KEY_RMT_HISTOGRAM_BINS,
                                          c.DEFAULT_HISTOGRAM_BINS))
        self.n_top_eigenvectors = int(rmt.get(c.KEY_RMT_N_TOP_EIGENVECTORS,
                                              c.DEFAULT_N_TOP_EIGENVECTORS))

        if self.surrogate_trials < 1:
            raise ValueError("surrogate_trials must be at least 1")


class NetworkSettings:
    """Network construction and export settings.

    Attributes
    ----------
    hub_threshold : int
        Nodes with degree strictly above this value are reported as hubs.
    export_format : str
        "graphml" or "gexf".
    methods : List[str]
        Distance methods to build trees for, subset of ["corr", "mi"].

    """

    def __init__(self, net: dict):
        self.hub_threshold = int(net.get(c.KEY_NETWORK_HUB_THRESHOLD,
                                         c.DEFAULT_HUB_THRESHOLD))
        self.export_format = net.get(c.KEY_NETWORK_EXPORT_FORMAT,
                                     c.DEFAULT_EXPORT_FORMAT)
        self.methods = list(net.get(c.KEY_NETWORK_METHODS, c.VALID_METHODS))

        if self.export_format not in c.VALID_EXPORT_FORMATS:
            raise ValueError(
                f"Unsupported export format {self.export_format!r}. Choose "
                f"one of {', '.join(c.VALID_EXPORT_FORMATS)}")

        for method in self.methods:
            if method not in c.VALID_METHODS:
                raise ValueError(
                    f"Unknown network method {method!r}. Choose from "
                    f"{', '.join(c.VALID_METHODS)}")


class SynthSettings:
    """Synthetic market settings, see synth.MarketSpec.

    All keys of the synth section are appended as attributes, with defaults
    for the ones that are missing.

    """

    def __init__(self, syn: dict):
        self.start_date = _parse_date(syn.get(c.KEY_SYNTH_START_DATE,
                                              c.DEFAULT_SYNTH_START_DATE))
        self.days = int(syn.get(c.KEY_SYNTH_DAYS, c.DEFAULT_SYNTH_DAYS))
        self.market_beta = float(syn.get(c.KEY_SYNTH_MARKET_BETA, 0.0))
        self.sectors = list(syn.get(c.KEY_SYNTH_SECTORS, []))
        self.nonlinear_pairs = list(syn.get(c.KEY_SYNTH_NONLINEAR_PAIRS, []))
        self.price_scale = float(syn.get(c.KEY_SYNTH_PRICE_SCALE,
                                         c.DEFAULT_SYNTH_PRICE_SCALE))
        self.drop_probability = float(syn.get(c.KEY_SYNTH_DROP_PROBABILITY,
                                              0.0))


def _parse_time(value: Union[str, datetime.time]) -> datetime.time:
    if isinstance(value, datetime.time):
        return value

    return datetime.time.fromisoformat(value)


def _parse_date(value: Union[str, datetime.date]) -> datetime.date:
    if isinstance(value, datetime.date):
        return value

    return datetime.date.fromisoformat(value)
