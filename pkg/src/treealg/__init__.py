"""Exact symbolic computation with rooted trees and their word-algebra action."""

from .trees import (
    EMPTY_FOREST,
    Forest,
    ForestSyntaxError,
    LEAF,
    Tree,
    bplus,
    degree,
    enumerate_forests,
    enumerate_trees,
    forest_product,
    ladder,
    parse_forest,
    print_forest,
)
from .hopf import (
    HElem,
    TensorElem,
    coproduct,
    h_add,
    h_mul,
    h_scale,
    parse_helem,
    print_helem,
    print_tensor,
    tensor_mul,
)
from .words import (
    Poly,
    PolySyntaxError,
    concat,
    op_R,
    op_R_pow,
    parse_poly,
    print_poly,
    right_mul,
    strip_y,
)
from .diamond import diamond, sigma, sigma_forest
from .rtm import rho_is_zero_on_x, rtm_apply, rtm_tree_on_letter
from .relations import RelationReport, build_fmn, verify_fmn, verify_r_identity
from .linalg import (
    BitMatrix,
    RationalMatrix,
    basis_forests,
    basis_matrix,
    check_mod2_invertible,
    decompose,
    sigma_kernel,
    words_ending_in_y,
)

__all__ = [
    "EMPTY_FOREST",
    "Forest",
    "ForestSyntaxError",
    "LEAF",
    "Tree",
    "bplus",
    "degree",
    "enumerate_forests",
    "enumerate_trees",
    "forest_product",
    "ladder",
    "parse_forest",
    "print_forest",
    "HElem",
    "TensorElem",
    "coproduct",
    "h_add",
    "h_mul",
    "h_scale",
    "parse_helem",
    "print_helem",
    "print_tensor",
    "tensor_mul",
    "Poly",
    "PolySyntaxError",
    "concat",
    "op_R",
    "op_R_pow",
    "parse_poly",
    "print_poly",
    "right_mul",
    "strip_y",
    "diamond",
    "sigma",
    "sigma_forest",
    "rho_is_zero_on_x",
    "rtm_apply",
    "rtm_tree_on_letter",
    "RelationReport",
    "build_fmn",
    "verify_fmn",
    "verify_r_identity",
    "BitMatrix",
    "RationalMatrix",
    "basis_forests",
    "basis_matrix",
    "check_mod2_invertible",
    "decompose",
    "sigma_kernel",
    "words_ending_in_y",
]

__version__ = "0.1.0"
