"""Exact cone and semiring certificates for symmetric polynomial inequalities."""

from .lp import LPResult, solve_feasibility
from .generators import (ConeCertificate, Generator, Infeasible, Unknown, jack_diff, monomial_diff,
                         normalized_jack_gen, normalized_monomial_gen, parse_generator, product, target_hash)
from .search import (coefficient_in_cone, jack_cone_cert, muirhead_cone_cert, muirhead_generators,
                     muirhead_semiring_cert, verify_certificate)

__all__ = [
    "LPResult", "solve_feasibility", "ConeCertificate", "Generator", "Infeasible", "Unknown", "jack_diff",
    "monomial_diff", "normalized_jack_gen", "normalized_monomial_gen", "parse_generator", "product",
    "target_hash", "coefficient_in_cone", "jack_cone_cert", "muirhead_cone_cert", "muirhead_generators",
    "muirhead_semiring_cert", "verify_certificate",
]
