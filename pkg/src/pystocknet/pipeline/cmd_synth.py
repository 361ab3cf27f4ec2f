import logging
from pathlib import Path

from pystocknet import constants as c
from pystocknet.output_writer import OutputWriter
from pystocknet.settings_pystocknet import PystocknetSettings
from pystocknet.synth.generate_ticks import generate_metadata, generate_ticks
from pystocknet.synth.market_spec import MarketSpec

logger = logging.getLogger(__name__)


def cmd_synth(settings: PystocknetSettings) -> MarketSpec:
    """Write a synthetic market: synth/ticks.csv, metadata.csv, truth.json.

    The tick and metadata files are plain CSVs that the ingest stage reads
    directly, their provenance is listed in manifest.json.

    """
    spec = MarketSpec.from_settings(settings)
    logger.info(f"Generating {spec.n_symbols} symbols over {spec.days} days")

    writer = OutputWriter(settings)
    writer.write_bytes(Path(c.DIR_SYNTH) / c.FILE_SYNTH_TICKS,
                       generate_ticks(spec), kind='csv')
    writer.write_bytes(Path(c.DIR_SYNTH) / c.FILE_SYNTH_METADATA,
                       generate_metadata(spec), kind='csv')
    writer.write_json(Path(c.DIR_SYNTH) / c.FILE_SYNTH_TRUTH,
                      spec.ground_truth())
    writer.write_manifest()

    return spec
