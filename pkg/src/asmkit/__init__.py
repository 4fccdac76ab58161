"""Exact enumeration of alternating sign matrices and monotone triangles.

The package evaluates the operator formula for monotone triangles with a
prescribed bottom row, counts the underlying objects by brute force, and
checks the refined enumeration identities with exact arithmetic.
"""

from asmkit.exact_math import Matrix, binomial, det_exact, rising_factorial
from asmkit.poly import Poly, vandermonde_poly
from asmkit.combinatorics import (
    MonotoneTriangle,
    SignMatrix,
    alpha_brute,
    count_side_matrices_brute,
    enumerate_asms,
    enumerate_triangles,
    refined_counts_brute,
)
from asmkit.operator_formula import alpha_eval, alpha_last_var_poly, alpha_poly
from asmkit.formulas import asm_total, dpp_determinant, refined_formula, side_formula
from asmkit.verifier import VerifyConfig, run_all

__all__ = [
    "Matrix",
    "MonotoneTriangle",
    "Poly",
    "SignMatrix",
    "VerifyConfig",
    "alpha_brute",
    "alpha_eval",
    "alpha_last_var_poly",
    "alpha_poly",
    "asm_total",
    "binomial",
    "count_side_matrices_brute",
    "det_exact",
    "dpp_determinant",
    "enumerate_asms",
    "enumerate_triangles",
    "refined_counts_brute",
    "refined_formula",
    "rising_factorial",
    "run_all",
    "side_formula",
    "vandermonde_poly",
]

__version__ = "0.1.0"
