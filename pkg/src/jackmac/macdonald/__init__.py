"""Macdonald polynomials over Q(q, t)."""

from .construct import (QT, MacP, invert_parameters, mac_P, mac_family, one_row_two_vars, principal_spec_ones,
                        principal_spec_tdelta, tdelta)
from .twovar import (TwoVarSeq, b_seq, bracket, bracket_alternative, bracket_choices, bracket_collapses_at_q_equals_t,
                     c_seq, normalized_mac, normalized_mac_diff, twovar_partial_sums)

__all__ = [
    "QT", "MacP", "invert_parameters", "mac_P", "mac_family", "one_row_two_vars", "principal_spec_ones",
    "principal_spec_tdelta", "tdelta", "TwoVarSeq", "b_seq", "bracket", "bracket_alternative", "bracket_choices",
    "bracket_collapses_at_q_equals_t", "c_seq", "normalized_mac", "normalized_mac_diff", "twovar_partial_sums",
]
