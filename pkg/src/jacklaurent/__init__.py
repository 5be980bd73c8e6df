"""Exact computer algebra for Jack-Laurent symmetric functions.

The engine works in the free commutative algebra on generators p_i
(i a nonzero integer) over the field Q(k, p0) of rational functions in
two parameters, constructs the Jack-Laurent symmetric functions
P_{lambda,mu} by spectral projection, implements the commuting families
of CMS integrals, and verifies the closed formulas (Pieri, evaluation,
norms, duality, Jacobi-Trudy) against an independent finite-N oracle.
"""

from .rational import ParamRat, rat, parse_rat, K, P0, RAT_ZERO, RAT_ONE, \
    DivisionByZero, PoleAtSpecialization, IdenticallySingular, \
    SingularParameter, NotEigenvector
from .laurent import LaurentSymFunc, parse_element
from .partitions import normalize_partition, conjugate, chi_N, \
    w_bipartition, w_sequence, partitions_of, bipartitions_up_to
from .operators import cms_L, cms_I, stable_H, cms_L2_direct, \
    stable_H2_direct
from .closed_forms import eigenvalue_e, eigenvalue_eN, evaluation_value, \
    norm_value, duality_constant, pieri_V, pieri_U, phi_infinity
from .jack import JackLaurentFunction, construct, eigen_check_all, \
    rational_mode_construct
from .finite_n import SymLaurentPolyN, jack_poly_N, jack_laurent_poly_N, \
    phi_N_map, torus_form
from .schur import jacobi_trudy_S, schur_limit
from .verify import run_suite

__version__ = "0.1.0"

__all__ = [
    "ParamRat", "rat", "parse_rat", "K", "P0", "RAT_ZERO", "RAT_ONE",
    "DivisionByZero", "PoleAtSpecialization", "IdenticallySingular",
    "SingularParameter", "NotEigenvector",
    "LaurentSymFunc", "parse_element",
    "normalize_partition", "conjugate", "chi_N", "w_bipartition",
    "w_sequence", "partitions_of", "bipartitions_up_to",
    "cms_L", "cms_I", "stable_H", "cms_L2_direct", "stable_H2_direct",
    "eigenvalue_e", "eigenvalue_eN", "evaluation_value", "norm_value",
    "duality_constant", "pieri_V", "pieri_U", "phi_infinity",
    "JackLaurentFunction", "construct", "eigen_check_all",
    "rational_mode_construct",
    "SymLaurentPolyN", "jack_poly_N", "jack_laurent_poly_N", "phi_N_map",
    "torus_form",
    "jacobi_trudy_S", "schur_limit",
    "run_suite",
    "__version__",
]
