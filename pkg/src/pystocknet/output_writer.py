import json
import logging
from pathlib import Path
from typing import Any, Dict, Optional, Union

import pandas as pd

from pystocknet import __version__
from pystocknet import constants as c
from pystocknet.settings_pystocknet import PystocknetSettings

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]


class OutputWriter:
    """Write stage outputs below the output directory.

    Every CSV starts with "# key=value" header lines holding the config
    hash, the master seed and the package version, every JSON document
    carries them in a top-level "metadata" object. Written files are
    recorded and listed in manifest.json by write_manifest.

    Parameters
    ----------
    settings : PystocknetSettings
        Effective settings of the run.
    output_dir : str, optional
        Overrides settings.output_dir.

    """

    def __init__(self, settings: PystocknetSettings,
                 output_dir: Optional[PathLike] = None):
        self.root = Path(output_dir if output_dir is not None
                         else settings.output_dir)
        self.metadata = {
            c.KEY_METADATA_CONFIG_HASH: settings.config_hash(),
            c.KEY_METADATA_SEED: settings.seed,
            c.KEY_METADATA_VERSION: __version__,
        }
        self.written: Dict[str, str] = {}

    def path(self, *parts: str) -> Path:
        return self.root.joinpath(*parts)

    def write_csv(self, relative_path: PathLike, frame: pd.DataFrame,
                  index: bool = False,
                  header_lines: Optional[Dict[str, Any]] = None) -> Path:
        """Write a table with the metadata header lines on top."""
        lines = dict(self.metadata)
        lines.update(header_lines or {})
        header = ''.join(f"# {key}={value}\n" for key, value in lines.items())

        body = frame.to_csv(index=index, lineterminator='\n')
        return self._write(relative_path, (header + body).encode('utf-8'),
                           kind='csv')

    def write_json(self, relative_path: PathLike,
                   document: Dict[str, Any]) -> Path:
        """Write a JSON document with a top-level metadata object."""
        document = {c.KEY_METADATA: dict(self.metadata), **document}
        text = json.dumps(document, indent=2, sort_keys=False) + '\n'
        return self._write(relative_path, text.encode('utf-8'), kind='json')

    def write_bytes(self, relative_path: PathLike, content: bytes,
                    kind: str) -> Path:
        """Write a document whose format cannot hold our header lines."""
        return self._write(relative_path, content, kind=kind)

    def write_manifest(self) -> Path:
        """Write manifest.json, merged with the entries of earlier stages."""
        manifest_path = self.path(c.FILE_MANIFEST)

        files = {}
        if manifest_path.exists():
            with open(manifest_path, 'r') as fp:
                files = json.load(fp).get('files', {})
        files.update(self.written)

        document = {c.KEY_METADATA: dict(self.metadata),
                    'files': dict(sorted(files.items()))}
        manifest_path.parent.mkdir(parents=True, exist_ok=True)
        manifest_path.write_text(json.dumps(document, indent=2) + '\n')

        logger.info(f"Manifest lists {len(files)} files")
        return manifest_path

    def _write(self, relative_path: PathLike, content: bytes,
               kind: str) -> Path:
        target = self.root / relative_path
        target.parent.mkdir(parents=True, exist_ok=True)
        target.write_bytes(content)

        self.written[Path(relative_path).as_posix()] = kind
        logger.debug(f"Wrote {target}")
        return target


def read_csv_output(path: PathLike, **kwargs) -> pd.DataFrame:
    """Read a CSV written by OutputWriter, skipping its header lines."""
    return pd.read_csv(path, comment='#', float_precision='round_trip',
                       **kwargs)


def read_header_lines(path: PathLike) -> Dict[str, str]:
    """The "# key=value" header lines of a CSV written by OutputWriter."""
    header = {}
    with open(path, 'r', encoding='utf-8') as fp:
        for line in fp:
            if not line.startswith('#'):
                break
            key, _, value = line[1:].strip().partition('=')
            header[key] = value

    return header
