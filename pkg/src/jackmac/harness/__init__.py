"""Numeric falsification, degree growth, kernel quadrature and conjecture scans."""

from .sampling import DOMAINS, Verdict, family_member, growth_check, replay_witness, sample_check, sample_points
from .quadrature import QuadratureReport, integrate_kernel, oo_kernel_quadrature, random_decreasing_point
from .scan import (CONJECTURES, ScanRecord, check_pair, conjecture_scan, parse_param, qualifying_pairs, scan_tasks,
                   summarize)

__all__ = [
    "DOMAINS", "Verdict", "family_member", "growth_check", "replay_witness", "sample_check", "sample_points",
    "QuadratureReport", "integrate_kernel", "oo_kernel_quadrature", "random_decreasing_point", "CONJECTURES",
    "ScanRecord", "check_pair", "conjecture_scan", "parse_param", "qualifying_pairs", "scan_tasks", "summarize",
]
