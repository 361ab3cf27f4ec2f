import logging
from pathlib import Path
from typing import List, Optional

from pystocknet import constants as c
from pystocknet.ingest.panel_io import find_panels, panel_file_name, read_panel
from pystocknet.ingest.returns_panel import ReturnsPanel
from pystocknet.settings_pystocknet import PystocknetSettings

logger = logging.getLogger(__name__)


def load_period_panels(settings: PystocknetSettings,
                       period: Optional[str] = None) -> List[ReturnsPanel]:
    """Read the returns panels written by the ingest stage.

    Panels come in the configured period order, or sorted by name when no
    periods are configured. Panels without observations are skipped.

    Raises
    ------
    FileNotFoundError
        If the ingest stage has not written the requested panels.

    """
    panel_dir = Path(settings.output_dir) / c.DIR_PANELS

    if period is None and settings.session.period_boundaries:
        paths = [panel_dir / panel_file_name(boundary.name)
                 for boundary in settings.session.period_boundaries]
        paths = [path for path in paths if path.exists()]
        if not paths:
            raise FileNotFoundError(f"No returns panels found in {panel_dir}")
    else:
        paths = find_panels(panel_dir, period)

    panels = []
    for path in paths:
        panel = read_panel(path)
        if panel.n_observations == 0:
            logger.warning(f"Skipping period {panel.period!r}: no observations")
            continue
        panels.append(panel)

    return panels
