KEY_PARAM_MODE = 'mode'
KEY_PARAM_SEED = 'seed'
KEY_PARAM_STRICT = 'strict'
KEY_PARAM_OUTPUT_DIR = 'output_dir'
KEY_PARAM_INPUT = 'input'
KEY_PARAM_SESSION = 'session'
KEY_PARAM_ESTIMATOR = 'estimator'
KEY_PARAM_RMT = 'rmt'
KEY_PARAM_NETWORK = 'network'
KEY_PARAM_SYNTH = 'synth'

KEY_INPUT_TICK_FILE = 'tick_file'
KEY_INPUT_METADATA_FILE = 'metadata_file'

KEY_SESSION_OPEN = 'session_open'
KEY_SESSION_CLOSE = 'session_close'
KEY_SESSION_BAR_WIDTH = 'bar_width'
KEY_SESSION_TRADING_DAYS = 'trading_days'
KEY_SESSION_PERIOD_BOUNDARIES = 'period_boundaries'
KEY_SESSION_MAX_EMPTY_FRACTION = 'max_empty_fraction'

KEY_PERIOD_NAME = 'name'
KEY_PERIOD_START = 'start'
KEY_PERIOD_END = 'end'

KEY_ESTIMATOR_BINS_RULE = 'bins_rule'
KEY_ESTIMATOR_BIAS_CORRECTION = 'bias_correction'
KEY_ESTIMATOR_PERMUTATION_TRIALS = 'permutation_trials'
KEY_ESTIMATOR_ALPHA = 'alpha'
KEY_ESTIMATOR_N_JOBS = 'n_jobs'

KEY_RMT_SURROGATE_TRIALS = 'surrogate_trials'
KEY_RMT_HISTOGRAM_BINS = 'histogram_bins'
KEY_RMT_N_TOP_EIGENVECTORS = 'n_top_eigenvectors'

KEY_NETWORK_HUB_THRESHOLD = 'hub_threshold'
KEY_NETWORK_EXPORT_FORMAT = 'export_format'
KEY_NETWORK_METHODS = 'methods'

KEY_SYNTH_START_DATE = 'start_date'
KEY_SYNTH_DAYS = 'days'
KEY_SYNTH_MARKET_BETA = 'market_beta'
KEY_SYNTH_SECTORS = 'sectors'
KEY_SYNTH_NONLINEAR_PAIRS = 'nonlinear_pairs'
KEY_SYNTH_PRICE_SCALE = 'price_scale'
KEY_SYNTH_DROP_PROBABILITY = 'drop_probability'

KEY_SECTOR_NAME = 'name'
KEY_SECTOR_SIZE = 'size'
KEY_SECTOR_INTRA_CORRELATION = 'intra_correlation'

KEY_PAIR_I = 'i'
KEY_PAIR_J = 'j'
KEY_PAIR_FORM = 'form'

KEY_METADATA = 'metadata'
KEY_METADATA_CONFIG_HASH = 'config_hash'
KEY_METADATA_SEED = 'seed'
KEY_METADATA_VERSION = 'version'

MODE_INGEST = 'ingest'
MODE_PAIRS = 'pairs'
MODE_RMT = 'rmt'
MODE_NETWORK = 'network'
MODE_SYNTH = 'synth'
MODE_REPORT = 'report'
VALID_MODES = [MODE_INGEST, MODE_PAIRS, MODE_RMT, MODE_NETWORK, MODE_SYNTH,
               MODE_REPORT]

METHOD_CORRELATION = 'corr'
METHOD_MUTUAL_INFORMATION = 'mi'
VALID_METHODS = [METHOD_CORRELATION, METHOD_MUTUAL_INFORMATION]

BINS_RULE_SQRT_N_OVER_5 = 'sqrt_n_over_5'
BINS_RULE_CUBE_ROOT = 'cube_root'
VALID_BINS_RULES = [BINS_RULE_SQRT_N_OVER_5, BINS_RULE_CUBE_ROOT]

BIAS_CORRECTION_GRASSBERGER = 'grassberger'
BIAS_CORRECTION_NONE = 'none'
VALID_BIAS_CORRECTIONS = [BIAS_CORRECTION_GRASSBERGER, BIAS_CORRECTION_NONE]

EXPORT_FORMAT_GRAPHML = 'graphml'
EXPORT_FORMAT_GEXF = 'gexf'
VALID_EXPORT_FORMATS = [EXPORT_FORMAT_GRAPHML, EXPORT_FORMAT_GEXF]

COUPLING_SQUARE = 'square'
COUPLING_SINE = 'sine'
VALID_COUPLINGS = [COUPLING_SQUARE, COUPLING_SINE]

# Tick CSV grammar
TICK_COLUMN_TIMESTAMP = 'timestamp'
TICK_COLUMN_SYMBOL = 'symbol'
TICK_COLUMN_PRICE = 'price'
TICK_COLUMN_VOLUME = 'volume'
TICK_COLUMNS = [TICK_COLUMN_TIMESTAMP, TICK_COLUMN_SYMBOL, TICK_COLUMN_PRICE,
                TICK_COLUMN_VOLUME]
METADATA_COLUMN_SYMBOL = 'symbol'
METADATA_COLUMN_SECTOR = 'sector'
UNKNOWN_SECTOR = 'UNKNOWN'

BAR_COLUMN_WINDOW_START = 'window_start'
BAR_COLUMN_VWAP = 'vwap'
BAR_COLUMN_FILLED = 'filled'
PANEL_INDEX_NAME = 'window'

DEFAULT_SESSION_OPEN = '09:30:00'
DEFAULT_SESSION_CLOSE = '15:30:00'
DEFAULT_BAR_WIDTH = 30
DEFAULT_MAX_EMPTY_FRACTION = 0.2
DEFAULT_PERIOD_NAME = 'all'

DEFAULT_BINS_RULE = BINS_RULE_SQRT_N_OVER_5
DEFAULT_BIAS_CORRECTION = BIAS_CORRECTION_GRASSBERGER
DEFAULT_PERMUTATION_TRIALS = 199
DEFAULT_ALPHA = 0.05
DEFAULT_N_JOBS = 1
MIN_PERMUTATION_TRIALS = 99
MIN_MI_SAMPLES = 50
# expected independent-cell occupancy used by the default bins rule
MIN_EXPECTED_CELL_OCCUPANCY = 5

DEFAULT_SURROGATE_TRIALS = 50
DEFAULT_HISTOGRAM_BINS = 50
DEFAULT_N_TOP_EIGENVECTORS = 3
HISTOGRAM_RANGE_PADDING = 1.05

DEFAULT_HUB_THRESHOLD = 4
DEFAULT_EXPORT_FORMAT = EXPORT_FORMAT_GRAPHML
DEFAULT_X_MIN = 1

DEFAULT_SYNTH_START_DATE = '2014-01-01'
DEFAULT_SYNTH_DAYS = 5
DEFAULT_SYNTH_PRICE_SCALE = 100.0
SYNTH_PRICE_DECIMALS = 10
SYNTH_SINE_FREQUENCY = 4.0
SYNTH_SINE_NOISE = 0.1

# Numerical tolerances
TOL_SYMMETRY = 1e-12
TOL_NEGATIVE_EIGENVALUE = 1e-10
TOL_PMF_SUM = 1e-9
TOL_MI_CLAMP = 1e-12
TOL_FIEDLER_ZERO = 1e-10
TOL_FIEDLER_GAP = 1e-8
TOL_CONNECTIVITY = 1e-10
TOL_POWER_ITERATION = 1e-10
MAX_POWER_ITERATIONS = 100_000

# Output layout
DIR_PANELS = 'panels'
DIR_PAIRS = 'pairs'
DIR_RMT = 'rmt'
DIR_NETWORK = 'network'
DIR_SYNTH = 'synth'

FILE_RETURNS_PREFIX = 'returns_'
FILE_DROP_REPORT = 'drop_report.csv'
FILE_DATASET_SUMMARY = 'dataset_summary.csv'
FILE_SECTOR_COMPOSITION = 'sector_composition.csv'
FILE_SCATTER = 'scatter.csv'
FILE_RHO_SUMMARY = 'rho_summary.csv'
FILE_SPECTRUM = 'spectrum.json'
FILE_HISTOGRAM = 'histogram.csv'
FILE_SURROGATE_HISTOGRAM = 'surrogate_histogram.csv'
FILE_EIGENVECTORS = 'eigenvectors.csv'
FILE_TREE_STEM = 'tree'
FILE_DEGREE = 'degree.csv'
FILE_CENTRALITY = 'centrality.csv'
FILE_HUBS = 'hubs.csv'
FILE_POWERLAW_SUMMARY = 'powerlaw_summary.csv'
FILE_SYNTH_TICKS = 'ticks.csv'
FILE_SYNTH_METADATA = 'metadata.csv'
FILE_SYNTH_TRUTH = 'truth.json'
FILE_MANIFEST = 'manifest.json'

PAIR_MATRIX_FIELDS = ['rho', 'mi', 'nmi', 'd_corr', 'd_mi', 'p_value']

PERCENT_DECIMALS = 2
