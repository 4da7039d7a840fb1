"""Jack polynomials with parameter tau = 1/alpha."""

from .construct import (INFINITY, JackP, branching_ratio, hook_constant, integral_jack, jack_P, jack_family,
                        one_row_jack, principal_specialization, specialize)
from .normalized import (binomial_expansion, containment_positivity, generalized_binomial, normalized_diff,
                         normalized_jack, normalized_jack_coordinates)
from .transition import (inverse_monomial_matrix, last_sign_quadratic_closed_form, monomial_matrix,
                         computed_monomial_matrix, normalized_transition, sign_quadratic, top_difference_coefficients,
                         transition_closed_form, transition_matrix, verify_transition)
from .kadell import (KadellValue, kadell_adjacent_ratio, kadell_certify, kadell_difference, kadell_normalized,
                     kadell_ratio_holds)
from .ahw import AHWData, ahw_coeffs, max_imaginary_part, real_rootedness, schur_coefficient
from .two_rows import (hook_pair, hook_pair_collapse, hook_pair_parameter_ratio, jack_coordinates,
                       normalized_jack_coordinates_in, row_pair_f, row_pair_f_computed, row_pair_g,
                       row_pair_muirhead_coefficients, row_pair_partial_sum_closed_form, verify_row_pair,
                       verify_row_pair_partial_sums)

__all__ = [
    "INFINITY", "JackP", "branching_ratio", "hook_constant", "integral_jack", "jack_P", "jack_family",
    "one_row_jack", "principal_specialization", "specialize", "binomial_expansion", "containment_positivity",
    "generalized_binomial", "normalized_diff", "normalized_jack", "normalized_jack_coordinates",
    "inverse_monomial_matrix", "last_sign_quadratic_closed_form", "monomial_matrix", "computed_monomial_matrix",
    "normalized_transition", "sign_quadratic", "top_difference_coefficients", "transition_closed_form",
    "transition_matrix", "verify_transition", "KadellValue", "kadell_adjacent_ratio", "kadell_certify",
    "kadell_difference", "kadell_normalized", "kadell_ratio_holds", "AHWData", "ahw_coeffs", "max_imaginary_part",
    "real_rootedness", "schur_coefficient", "hook_pair", "hook_pair_collapse", "hook_pair_parameter_ratio",
    "jack_coordinates", "normalized_jack_coordinates_in", "row_pair_f", "row_pair_f_computed", "row_pair_g",
    "row_pair_muirhead_coefficients", "row_pair_partial_sum_closed_form", "verify_row_pair",
    "verify_row_pair_partial_sums",
]
