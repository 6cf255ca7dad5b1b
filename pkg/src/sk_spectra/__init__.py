"""Exact determinants, spectra, and per-size certification for Clement-type
tridiagonal matrix families."""

from .exact_arith import (DiscriminantMismatch, MultiPoly, QuadExt, Rational,
                          VARIABLES, const_like, variables)
from .tridiag import Tridiagonal, det_cofactor
from .families import (FAMILY_ARITY, JParams, MParams, ParameterCountMismatch,
                       PmParams, build_params, clement, j_matrix, m_matrix,
                       m_pm_matrix, matrix_for, report_family,
                       split_family_tag, substitution_to_m, symbolic_params)
from .closed_forms import (Spectrum, charpoly_closed, det_closed,
                           eval_in_extension, spectrum_for, spectrum_j,
                           spectrum_m, spectrum_mpm)
from .verify import (VerificationReport, certify, certify_matrix_vs_spectrum,
                     numeric_residual, reports_to_json, run_suite,
                     verify_chu, verify_clement, verify_conjecture,
                     verify_mpm, verify_substitutions)

__version__ = "0.1.0"

__all__ = [
    "DiscriminantMismatch", "MultiPoly", "QuadExt", "Rational", "VARIABLES",
    "const_like", "variables",
    "Tridiagonal", "det_cofactor",
    "FAMILY_ARITY", "JParams", "MParams", "ParameterCountMismatch", "PmParams",
    "build_params", "clement", "j_matrix", "m_matrix", "m_pm_matrix",
    "matrix_for", "report_family", "split_family_tag", "substitution_to_m",
    "symbolic_params",
    "Spectrum", "charpoly_closed", "det_closed", "eval_in_extension",
    "spectrum_for", "spectrum_j", "spectrum_m", "spectrum_mpm",
    "VerificationReport", "certify", "certify_matrix_vs_spectrum",
    "numeric_residual", "reports_to_json", "run_suite", "verify_chu",
    "verify_clement", "verify_conjecture", "verify_mpm",
    "verify_substitutions",
    "__version__",
]
