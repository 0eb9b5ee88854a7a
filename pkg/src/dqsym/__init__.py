"""Exact computations with q-bracketings in colored free quasi-symmetric functions."""

from .qpoly import Q, QPoly, FactoredCoeff, try_factor
from .fqsym import Biword, Element, generator, product, left_dend, right_dend
from .identities import (
    BasisExpansion,
    SpanError,
    psi_u,
    psi_sigma,
    sigma_n,
    p_L,
    r_IJ,
    lambda_IJ,
    expand_in_R,
    r_to_lambda,
    lambda_to_R,
    theorem1_prediction,
    theorem2_prediction,
    c_coefficient,
    glue_L,
)
from .verify import verify_all, run_suite

__all__ = [
    "Q", "QPoly", "FactoredCoeff", "try_factor",
    "Biword", "Element", "generator", "product", "left_dend", "right_dend",
    "BasisExpansion", "SpanError", "psi_u", "psi_sigma", "sigma_n", "p_L",
    "r_IJ", "lambda_IJ", "expand_in_R", "r_to_lambda", "lambda_to_R",
    "theorem1_prediction", "theorem2_prediction", "c_coefficient", "glue_L",
    "verify_all", "run_suite",
]

__version__ = "0.1.0"
