"""Rational zeros of weighted-homogeneous polynomials on weighted projective spaces over F_q."""

__version__ = "0.1.0"
