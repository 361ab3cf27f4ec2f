from .marchenko_pastur import MPParams, mp_bounds, mp_pdf, mp_probability
from .spectrum import (
    SpectrumReport, classify_spectrum, eigen_decompose, spectrum_histogram,
    spectrum_report)
from .surrogate import SurrogateEnsemble, surrogate_ensemble, surrogate_shuffle
from .eigenvector_components import top_eigenvector_components
