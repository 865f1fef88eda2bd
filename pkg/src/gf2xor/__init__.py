"""GF(2) linear algebra and exhaustive XOR-count search for binary fields."""

from .gf2mat import Gf2Mat, PolyMat, char_poly, min_poly, poly_eval_matrix, sym_det
from .gf2poly import (
    Gf2Poly,
    enumerate_irreducibles,
    factor_as_power,
    smallest_factor,
)
from .synth import XorProgram, check_equivalence, emit_program, simulate
from .verify import VerifyReport
from .xorform import (
    CycleType,
    ElementClass,
    SearchReport,
    XorProduct,
    cycle_normal_form,
    element_check,
    enumerate_products,
    min_xor_count_for_poly,
    xor_count_exact,
)

__version__ = "0.1.0"

__all__ = [
    "CycleType",
    "ElementClass",
    "Gf2Mat",
    "Gf2Poly",
    "PolyMat",
    "SearchReport",
    "VerifyReport",
    "XorProduct",
    "XorProgram",
    "char_poly",
    "check_equivalence",
    "cycle_normal_form",
    "element_check",
    "emit_program",
    "enumerate_irreducibles",
    "enumerate_products",
    "factor_as_power",
    "min_poly",
    "min_xor_count_for_poly",
    "poly_eval_matrix",
    "simulate",
    "smallest_factor",
    "sym_det",
    "xor_count_exact",
]
