"""Exact substrate: integer polynomials and matrices, HNF/SNF, F_p
factorization, ball arithmetic, certified root isolation."""

from .polys import IntPolynomial
from .matrices import IntMatrix, hnf, snf
from .modpoly import factor_mod_p
from .balls import RealBall, ComplexBall
from .roots import complex_roots

__all__ = [
    "IntPolynomial", "IntMatrix", "hnf", "snf", "factor_mod_p",
    "RealBall", "ComplexBall", "complex_roots",
]
