"""Exact arithmetic for hyperbolic Jacobsthal spinor sequences.

The main entry points are re-exported here; see the submodules for the
full surface.
"""
from .hyperbolic import U, Hyperbolic, hyp_conj, hyp_join, hyp_mul, hyp_split
from .ring import C, X, ExtElem, RatFunc, UniPoly, ext_div, ext_mul, poly_eval, poly_mul, rat_normalize
from .sequences import (
    BinetConstants, SeqKind, binet_constants, jacobsthal, jacobsthal_lucas,
    jacobsthal_poly, spinor_binet, spinor_partial_sum, spinor_poly_binet,
    spinor_poly_term, spinor_term, split_quat_seq,
)
from .series import TruncatedSeries, denom_inverse, gen_function_series, poly_gen_series
from .spinor import (
    SPIN_C, HypSpinor, PolySpinor, isotropic_vector, quat_to_spinor, spinor_bar,
    spinor_mate, spinor_star, spinor_tilde,
)
from .splitquat import SplitQuat, sq_conj, sq_mul, sq_norm
from .verifier import Grid, Report, Status, Verdict, list_identities, run_suite, verify_identity

__version__ = "0.1.0"

__all__ = [
    "U",
    "Hyperbolic",
    "hyp_conj",
    "hyp_join",
    "hyp_mul",
    "hyp_split",
    "C",
    "X",
    "ExtElem",
    "RatFunc",
    "UniPoly",
    "ext_div",
    "ext_mul",
    "poly_eval",
    "poly_mul",
    "rat_normalize",
    "BinetConstants",
    "SeqKind",
    "binet_constants",
    "jacobsthal",
    "jacobsthal_lucas",
    "jacobsthal_poly",
    "spinor_binet",
    "spinor_partial_sum",
    "spinor_poly_binet",
    "spinor_poly_term",
    "spinor_term",
    "split_quat_seq",
    "TruncatedSeries",
    "denom_inverse",
    "gen_function_series",
    "poly_gen_series",
    "SPIN_C",
    "HypSpinor",
    "PolySpinor",
    "isotropic_vector",
    "quat_to_spinor",
    "spinor_bar",
    "spinor_mate",
    "spinor_star",
    "spinor_tilde",
    "SplitQuat",
    "sq_conj",
    "sq_mul",
    "sq_norm",
    "Grid",
    "Report",
    "Status",
    "Verdict",
    "list_identities",
    "run_suite",
    "verify_identity",
]
