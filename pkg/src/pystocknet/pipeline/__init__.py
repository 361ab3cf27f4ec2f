from .cmd_ingest import cmd_ingest
from .cmd_pairs import cmd_pairs, read_pair_matrix
from .cmd_rmt import cmd_rmt
from .cmd_network import cmd_network
from .cmd_synth import cmd_synth
from .cmd_report import cmd_report
from .period_panels import load_period_panels
