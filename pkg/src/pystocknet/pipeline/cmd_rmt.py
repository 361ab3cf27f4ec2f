import logging
from pathlib import Path
from typing import Dict, Optional

from pystocknet import constants as c
from pystocknet.infostats.correlation import correlation_matrix
from pystocknet.output_writer import OutputWriter
from pystocknet.pipeline.period_panels import load_period_panels
from pystocknet.rmt.eigenvector_components import top_eigenvector_components
from pystocknet.rmt.spectrum import (
    SpectrumReport, spectrum_histogram, spectrum_report)
from pystocknet.rmt.surrogate import surrogate_ensemble
from pystocknet.settings_pystocknet import PystocknetSettings

logger = logging.getLogger(__name__)


def cmd_rmt(settings: PystocknetSettings,
            period: Optional[str] = None) -> Dict[str, SpectrumReport]:
    """Correlation spectra against the Marchenko-Pastur law.

    Writes rmt/<period>/spectrum.json (bounds, fractions, eigenvalues and
    the shuffled-surrogate check), histogram.csv, surrogate_histogram.csv
    and eigenvectors.csv.

    """
    writer = OutputWriter(settings)
    rmt = settings.rmt
    reports = {}

    for panel in load_period_panels(settings, period):
        rho = correlation_matrix(panel).rho
        report = spectrum_report(rho, panel.n_observations, panel.symbols,
                                 panel.period)
        ensemble = surrogate_ensemble(panel, rmt.surrogate_trials,
                                      settings.seed)

        document = report.to_document()
        document['surrogate'] = {
            'trials': ensemble.trials,
            'pooled_frac_within': ensemble.pooled_frac_within,
            'frac_within': [float(value) for value in ensemble.frac_within],
        }

        period_dir = Path(c.DIR_RMT) / panel.period
        header = {'period': panel.period}
        writer.write_json(period_dir / c.FILE_SPECTRUM, document)
        writer.write_csv(period_dir / c.FILE_HISTOGRAM,
                         spectrum_histogram(report.eigenvalues, report.mp,
                                            bins=rmt.histogram_bins),
                         header_lines=header)
        writer.write_csv(period_dir / c.FILE_SURROGATE_HISTOGRAM,
                         ensemble.histogram(bins=rmt.histogram_bins),
                         header_lines=header)

        n_top = min(rmt.n_top_eigenvectors, panel.n_symbols)
        writer.write_csv(period_dir / c.FILE_EIGENVECTORS,
                         top_eigenvector_components(report, n_top,
                                                    panel.sectors),
                         header_lines=header)

        logger.info(f"Period {panel.period!r}: surrogate panels keep "
                    f"{100 * ensemble.pooled_frac_within:.2f}% of eigenvalues "
                    f"within bounds")
        reports[panel.period] = report

    writer.write_manifest()
    return reports
