import copy

from pystocknet.dev_data import DEVELOPMENT_PARAMETERS as _PACKAGE_PARAMETERS

# Edit freely, the package defaults stay untouched
DEVELOPMENT_PARAMETERS = copy.deepcopy(_PACKAGE_PARAMETERS)
DEVELOPMENT_PARAMETERS['output_dir'] = 'manual_output'
DEVELOPMENT_PARAMETERS['input'] = {
    'tick_file': 'manual_output/synth/ticks.csv',
    'metadata_file': 'manual_output/synth/metadata.csv'}
