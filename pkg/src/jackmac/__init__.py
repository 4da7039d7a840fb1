"""Exact computations with Jack and Macdonald polynomials and positivity certificates."""
