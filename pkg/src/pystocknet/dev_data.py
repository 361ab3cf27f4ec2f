from . import constants as c


DEVELOPMENT_PARAMETERS = dict(
    # modes: 'ingest', 'pairs', 'rmt', 'network', 'synth', 'report'
    mode=c.MODE_REPORT,
    # master seed of every random stream
    seed=7,
    # Set True to abort on the first malformed tick row
    strict=False,
    output_dir='dev_output',
    input={
        c.KEY_INPUT_TICK_FILE: 'dev_output/synth/ticks.csv',
        c.KEY_INPUT_METADATA_FILE: 'dev_output/synth/metadata.csv'},
    session={
        c.KEY_SESSION_OPEN: '09:30:00',
        # a short session keeps the development run fast
        c.KEY_SESSION_CLOSE: '11:10:00',
        c.KEY_SESSION_BAR_WIDTH: 30,
        c.KEY_SESSION_MAX_EMPTY_FRACTION: 0.2,
        c.KEY_SESSION_PERIOD_BOUNDARIES: [
            {c.KEY_PERIOD_NAME: 'early', c.KEY_PERIOD_START: '2014-01-01',
             c.KEY_PERIOD_END: '2014-01-03'},
            {c.KEY_PERIOD_NAME: 'late', c.KEY_PERIOD_START: '2014-01-06',
             c.KEY_PERIOD_END: '2014-01-08'}]},
    estimator={
        c.KEY_ESTIMATOR_BINS_RULE: c.BINS_RULE_SQRT_N_OVER_5,
        c.KEY_ESTIMATOR_BIAS_CORRECTION: c.BIAS_CORRECTION_GRASSBERGER,
        c.KEY_ESTIMATOR_PERMUTATION_TRIALS: 99,
        c.KEY_ESTIMATOR_ALPHA: 0.05,
        c.KEY_ESTIMATOR_N_JOBS: 1},
    rmt={
        c.KEY_RMT_SURROGATE_TRIALS: 10,
        c.KEY_RMT_HISTOGRAM_BINS: 30,
        c.KEY_RMT_N_TOP_EIGENVECTORS: 3},
    network={
        c.KEY_NETWORK_HUB_THRESHOLD: 4,
        c.KEY_NETWORK_EXPORT_FORMAT: c.EXPORT_FORMAT_GRAPHML,
        c.KEY_NETWORK_METHODS: c.VALID_METHODS},
    synth={
        c.KEY_SYNTH_START_DATE: '2014-01-01',
        c.KEY_SYNTH_DAYS: 6,
        c.KEY_SYNTH_MARKET_BETA: 0.3,
        c.KEY_SYNTH_SECTORS: [
            {c.KEY_SECTOR_NAME: 'Banks', c.KEY_SECTOR_SIZE: 8,
             c.KEY_SECTOR_INTRA_CORRELATION: 0.5},
            {c.KEY_SECTOR_NAME: 'Energy', c.KEY_SECTOR_SIZE: 6,
             c.KEY_SECTOR_INTRA_CORRELATION: 0.4},
            {c.KEY_SECTOR_NAME: 'Pharma', c.KEY_SECTOR_SIZE: 6,
             c.KEY_SECTOR_INTRA_CORRELATION: 0.3}],
        # symbol indices into the generated universe
        c.KEY_SYNTH_NONLINEAR_PAIRS: [
            {c.KEY_PAIR_I: 0, c.KEY_PAIR_J: 19,
             c.KEY_PAIR_FORM: c.COUPLING_SQUARE}],
        c.KEY_SYNTH_PRICE_SCALE: 100.0,
        c.KEY_SYNTH_DROP_PROBABILITY: 0.02},
)
