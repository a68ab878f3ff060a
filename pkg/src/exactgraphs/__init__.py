"""Graph spectra, exact maximum cuts, spectral cut bounds and exact graphs."""

__version__ = "0.1.0"

from .cut import CutResult, cohesion, cut_weight, max_cut, spectral_bounds
from .exactness import (
    ExactnessCertificate,
    certify_all,
    certify_exactness,
    direct_check,
    exclusivity_check,
    structural_check,
    sufficient_condition_check,
)
from .graph import Graph, MatrixKind, Partition, build_matrix, generate, join
from .spectra import Spectrum, eigen_sym, join_char_poly_roots, spreads, weyl_check
from .wilf import WilfSolution, wilf_decide, wilf_solve
