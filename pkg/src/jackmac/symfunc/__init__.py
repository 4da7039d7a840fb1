"""Symmetric polynomials in finitely many variables."""

from .sympoly import SymPoly, mul, orbit, orbit_size
from .bases import (BasisExpansion, basis_element, complete, e_lambda, elementary, expansion_in, h_lambda,
                    kostka_ssyt, monomial, normalized_monomial, p_lambda, powersum, schur, schur_bialternant,
                    schur_from_kostka, to_basis)
from .inner import (general_gram, inner_product, jack_gram, qt_inner, qt_weight, tau_inner, tau_weight,
                    triangular_orthogonalize)
from .vandermonde import NotDivisible, divide_by_vandermonde_sq, vandermonde_quotient

__all__ = [
    "SymPoly", "mul", "orbit", "orbit_size", "BasisExpansion", "basis_element", "complete", "e_lambda",
    "elementary", "expansion_in", "h_lambda", "kostka_ssyt", "monomial", "normalized_monomial", "p_lambda",
    "powersum", "schur", "schur_bialternant", "schur_from_kostka", "to_basis", "inner_product", "qt_inner",
    "qt_weight", "tau_inner", "tau_weight", "general_gram", "jack_gram", "triangular_orthogonalize",
    "NotDivisible", "divide_by_vandermonde_sq", "vandermonde_quotient",
]
