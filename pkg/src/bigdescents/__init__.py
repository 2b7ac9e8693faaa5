"""Exact enumeration of big-descent statistics over pattern-avoiding
permutations: permutation and lattice-path statistics, the bijections
relating them, generating functions with exact rational coefficients,
quasisymmetric/Schur expansions, and conjecture checkers."""

from .algebra import MultiPoly, TruncatedSeries, series_compose
from .bijections import (BIJECTIONS, apply, invert, reconstruct_from_maxima,
                         verify_transfer)
from .config import DEFAULT_LIMITS, Limits
from .conjectures import (branden_check, conjecture_scan, is_log_concave,
                          is_real_rooted, is_unimodal, real_root_count)
from .genfun import (carlitz_verify, catalan, eulerian_r, expand,
                     expand_by_peak_insertion, expand_functional, formula)
from .paths import (BinaryWord, DyckPath, TwoMotzkinPath, occ_factor,
                    path_statistic, return_decompose, run_count)
from .perms import (DistributionTable, PatternSet, contains,
                    distribution_table, enumerate_avoiders, standardize,
                    statistic, statistic_set, symmetry)
from .symfunc import (QsymExpansion, SymExpansion, fundamental_to_monomial,
                      is_schur_positive, is_symmetric, qsym_sum, schur_expand)

__version__ = "1.0.0"

__all__ = [
    "MultiPoly", "TruncatedSeries", "series_compose",
    "BIJECTIONS", "apply", "invert", "reconstruct_from_maxima",
    "verify_transfer",
    "DEFAULT_LIMITS", "Limits",
    "branden_check", "conjecture_scan", "is_log_concave", "is_real_rooted",
    "is_unimodal", "real_root_count",
    "carlitz_verify", "catalan", "eulerian_r", "expand",
    "expand_by_peak_insertion", "expand_functional", "formula",
    "BinaryWord", "DyckPath", "TwoMotzkinPath", "occ_factor",
    "path_statistic", "return_decompose", "run_count",
    "DistributionTable", "PatternSet", "contains", "distribution_table",
    "enumerate_avoiders", "standardize", "statistic", "statistic_set",
    "symmetry",
    "QsymExpansion", "SymExpansion", "fundamental_to_monomial",
    "is_schur_positive", "is_symmetric", "qsym_sum", "schur_expand",
    "__version__",
]
