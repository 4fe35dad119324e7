"""Exact computations with the type-A double affine Hecke algebra.

The algebra acts on Laurent polynomials in X_1..X_kappa over Q(s, c).  On
top of that representation the package provides a braid-word compiler for
the torus skein module, reduction of classes in the quotient module to the
constant class, the induced bilinear form, and nonsymmetric Macdonald
polynomials.
"""

from .braidcompile import BraidWord, NormalForm, eval_class, parse_braid, relation_witness
from .errors import DahaError
from .laurent import PolyElement, lx_div_root, lx_mul, lx_permute, lx_total_degree_components, rotate
from .macdonald import MacdonaldData, mac_poly, mac_support, orthogonality_check
from .pairing import axiom_pairing_table, braid_star, pair, pair_value, unitarity_check
from .parsing import parse_poly, parse_scalar
from .polyrep import OperatorWord, apply_word, op_g, op_T, op_T_inv, op_X, op_Y, phi_char
from .qreduce import Reducer, oracle_reduce, reduce_class, reduce_monomial
from .scalar import C, ONE, S, ZERO, Scalar, scalar_arith, scalar_is_zero, scalar_star

__version__ = "0.1.0"

__all__ = [
    "BraidWord",
    "C",
    "DahaError",
    "MacdonaldData",
    "NormalForm",
    "ONE",
    "OperatorWord",
    "PolyElement",
    "Reducer",
    "S",
    "Scalar",
    "ZERO",
    "apply_word",
    "axiom_pairing_table",
    "braid_star",
    "eval_class",
    "lx_div_root",
    "lx_mul",
    "lx_permute",
    "lx_total_degree_components",
    "mac_poly",
    "mac_support",
    "op_T",
    "op_T_inv",
    "op_X",
    "op_Y",
    "op_g",
    "oracle_reduce",
    "orthogonality_check",
    "pair",
    "pair_value",
    "parse_braid",
    "parse_poly",
    "parse_scalar",
    "phi_char",
    "reduce_class",
    "reduce_monomial",
    "relation_witness",
    "rotate",
    "scalar_arith",
    "scalar_is_zero",
    "scalar_star",
]
