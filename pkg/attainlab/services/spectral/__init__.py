"""Spectral data types and exact finite-dimensional kernels."""
from attainlab.services.spectral.types import (
    JordanBlockMatrix,
    ModalSystem,
    ModalVector,
    SpectralMode,
    spectral_sort_key,
)
from attainlab.services.spectral.jordan import jordan_exp, make_jordan_block, mode_exp
from attainlab.services.spectral.semigroup import (
    modal_vector_norm,
    semigroup_property_check,
    truncated_semigroup_apply,
)

__all__ = [
    "JordanBlockMatrix",
    "ModalSystem",
    "ModalVector",
    "SpectralMode",
    "spectral_sort_key",
    "jordan_exp",
    "make_jordan_block",
    "mode_exp",
    "modal_vector_norm",
    "semigroup_property_check",
    "truncated_semigroup_apply",
]
