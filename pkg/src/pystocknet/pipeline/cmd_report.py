import logging
from typing import Any, Dict, Optional

from pystocknet import constants as c
from pystocknet.pipeline.cmd_ingest import cmd_ingest
from pystocknet.pipeline.cmd_network import cmd_network
from pystocknet.pipeline.cmd_pairs import cmd_pairs
from pystocknet.pipeline.cmd_rmt import cmd_rmt
from pystocknet.settings_pystocknet import PystocknetSettings

logger = logging.getLogger(__name__)


def cmd_report(settings: PystocknetSettings, period: Optional[str] = None,
               method: Optional[str] = None) -> Dict[str, Any]:
    """Run ingest, pairs, rmt and network in sequence."""
    output = {c.MODE_INGEST: cmd_ingest(settings)}
    output[c.MODE_PAIRS] = cmd_pairs(settings, period)
    output[c.MODE_RMT] = cmd_rmt(settings, period)
    output[c.MODE_NETWORK] = cmd_network(settings, period, method)

    logger.info(f"Report written to {settings.output_dir}")
    return output
