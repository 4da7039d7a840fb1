"""Exact scalars: rationals, polynomials, rational functions and cone tests."""

from .field import Field, FieldMismatchError, PoleError, Poly, RatFunc, common_field, is_scalar, scalar_field, to_fraction
from .text import ParseError, format_poly, format_ratfunc, format_scalar, parse_poly, parse_ratfunc, parse_scalar
from .sturm import IndeterminateRootCount, real_root_count_with_multiplicity, sturm_root_count, sturm_sequence
from .qseries import pochhammer, q_binomial, q_factorial, q_integer, q_pochhammer
from .cone import Kind, PolyaCertificate, PositivityVerdict, fp_membership_qt, fp_membership_tau

__all__ = [
    "Field", "FieldMismatchError", "PoleError", "Poly", "RatFunc", "common_field", "is_scalar", "scalar_field",
    "to_fraction", "ParseError", "format_poly", "format_ratfunc", "format_scalar", "parse_poly", "parse_ratfunc",
    "parse_scalar", "IndeterminateRootCount", "real_root_count_with_multiplicity", "sturm_root_count",
    "sturm_sequence", "pochhammer", "q_binomial", "q_factorial", "q_integer", "q_pochhammer", "Kind",
    "PolyaCertificate", "PositivityVerdict", "fp_membership_qt", "fp_membership_tau",
]
