"""Characteristic quasi-polynomials of neutral delay equations."""
from attainlab.services.quasipoly.types import QuasiPolynomial, Region, RootCluster
from attainlab.services.quasipoly.delta import delta_eval, delta_log_abs
from attainlab.services.quasipoly.roots import find_roots, winding_number
from attainlab.services.quasipoly.growth import ExponentialTypeEstimate, exponential_type
from attainlab.services.quasipoly.bridge import to_modal_system

__all__ = [
    "QuasiPolynomial",
    "Region",
    "RootCluster",
    "delta_eval",
    "delta_log_abs",
    "find_roots",
    "winding_number",
    "ExponentialTypeEstimate",
    "exponential_type",
    "to_modal_system",
]
