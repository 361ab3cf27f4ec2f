from typing import Any, Dict, Optional

from pystocknet import constants as c
from pystocknet.pipeline.cmd_ingest import cmd_ingest
from pystocknet.pipeline.cmd_network import cmd_network
from pystocknet.pipeline.cmd_pairs import cmd_pairs
from pystocknet.pipeline.cmd_report import cmd_report
from pystocknet.pipeline.cmd_rmt import cmd_rmt
from pystocknet.pipeline.cmd_synth import cmd_synth
from pystocknet.settings_pystocknet import PystocknetSettings


def analyze_data(settings: PystocknetSettings, period: Optional[str] = None,
                 method: Optional[str] = None) -> Dict[str, Any]:
    """Run pystocknet in the mode selected in the settings.

    Parameters
    ----------
    settings : PystocknetSettings
        Settings class for pystocknet
    period : str, optional
        Restrict the pairs, rmt and network stages to one period.
    method : str, optional
        Restrict the network stage to one distance method.

    Returns
    -------
    Dict[str, Any]
        Output of every stage that ran, keyed by mode.

    """
    if settings.mode == c.MODE_INGEST:
        return {c.MODE_INGEST: cmd_ingest(settings)}

    if settings.mode == c.MODE_PAIRS:
        return {c.MODE_PAIRS: cmd_pairs(settings, period)}

    if settings.mode == c.MODE_RMT:
        return {c.MODE_RMT: cmd_rmt(settings, period)}

    if settings.mode == c.MODE_NETWORK:
        return {c.MODE_NETWORK: cmd_network(settings, period, method)}

    if settings.mode == c.MODE_SYNTH:
        return {c.MODE_SYNTH: cmd_synth(settings)}

    return cmd_report(settings, period, method)
