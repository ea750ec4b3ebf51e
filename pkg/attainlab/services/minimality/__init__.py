"""Finite-section analysis of exponential families."""
from attainlab.services.minimality.types import BiorthogonalTruncation, ExponentialFamily, QuadratureSpec
from attainlab.services.minimality.integrals import integrate_power_exp
from attainlab.services.minimality.gram import (
    family_values,
    gram_matrix,
    minimality_margin,
    minimality_verdict,
    section_margins,
)
from attainlab.services.minimality.biorthogonal import biorthogonal_truncation, family_from_system

__all__ = [
    "BiorthogonalTruncation",
    "ExponentialFamily",
    "QuadratureSpec",
    "integrate_power_exp",
    "family_values",
    "gram_matrix",
    "minimality_margin",
    "minimality_verdict",
    "section_margins",
    "biorthogonal_truncation",
    "family_from_system",
]
