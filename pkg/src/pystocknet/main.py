import argparse
import logging
import os
import sys
from typing import List, Optional, Union

from pystocknet import constants as c
from pystocknet.analyze_data import analyze_data
from pystocknet.settings_pystocknet import PystocknetSettings

logger = logging.getLogger(__name__)

DESCRIPTION = (
    "pystocknet builds correlation and mutual information networks of "
    "intraday stock returns, and tests their spectra against random matrix "
    "theory.")


def main(argv: Optional[List[str]] = None) -> int:
    """Run one pystocknet stage from the command line.

    Copy settings_example.json, save it as settings.json next to this file
    or pass it with --config. Command line flags override the top level
    settings.

    Returns
    -------
    int
        0 on success, 1 if the run failed on invalid input or settings.

    """
    args = _build_parser().parse_args(argv)

    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.INFO,
        format='%(asctime)s %(levelname)s %(name)s: %(message)s')

    try:
        settings = _parse_settings_to_settings_class(args.config)
        settings.override(mode=args.mode, seed=args.seed, strict=args.strict,
                          output_dir=args.out_dir)
        analyze_data(settings, period=args.period, method=args.method)
    except (ValueError, OSError) as error:
        logger.error(str(error))
        return 1

    return 0


def _parse_settings_to_settings_class(
        settings: Union[str, dict, PystocknetSettings, None] = None
) -> PystocknetSettings:
    """Settings from a class instance, a dict, a JSON file path or the
    package's own settings file."""
    if isinstance(settings, PystocknetSettings):
        return settings

    if isinstance(settings, dict):
        return PystocknetSettings(settings)

    settings_path = settings
    if settings_path is None:
        settings_path = os.path.join(os.path.dirname(__file__),
                                     "settings.json")

        if not os.path.exists(settings_path):
            logger.warning(
                "Settings path not specified. Using example settings.")
            settings_path = os.path.join(
                os.path.dirname(__file__), "settings_example.json")

    with open(settings_path, "r") as fp:
        output = fp.read()

    return PystocknetSettings(output)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog='pystocknet',
                                     description=DESCRIPTION)
    parser.add_argument("mode", choices=c.VALID_MODES,
                        help="Pipeline stage to run")
    parser.add_argument("--config", help="Path to a settings .json file")
    parser.add_argument("--seed", type=int, help="Override the master seed")
    parser.add_argument("--period", help="Restrict to one analysis period")
    parser.add_argument("--method", choices=c.VALID_METHODS,
                        help="Restrict the network stage to one distance")
    parser.add_argument("--strict", action='store_true', default=None,
                        help="Abort on the first malformed tick row")
    parser.add_argument("--out-dir", help="Override the output directory")
    parser.add_argument("--verbose", action='store_true',
                        help="Log debug messages")
    return parser


def run():
    sys.exit(main())


if __name__ == '__main__':
    run()
