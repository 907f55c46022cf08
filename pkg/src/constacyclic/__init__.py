"""Constacyclic and negacyclic codes of length 2^a m p^r over finite fields."""
from .constacode import (
    CodeShape, ConstaCode, ExponentVector, MonomialMap, build_code, code_from_generator,
    cyclic_equivalent, dual, enumerate_codes, exponent_vector, generator_matrix, is_self_dual,
    shape_decompose,
)
from .cyclo_factor import (
    cyclotomic_cosets, factor_binomial, factor_grid, minimal_polynomial, multiplicative_order,
)
from .field_core import Felt, FieldSpec, make_field, nth_root_of, prth_root, root_of_unity
from .polyring import Poly
from .selfdual_neg import (
    classify_factors, consistency_report, enumerate_selfdual, selfdual_exists_paper,
    selfdual_exists_structural,
)

__version__ = "0.1.0"
