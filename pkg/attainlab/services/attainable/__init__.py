"""Attainable sets of spectral truncations."""
from attainlab.services.attainable.types import (
    GramianQuadrature,
    IndependenceReport,
    SubspaceBasis,
    TruncatedRealization,
)
from attainlab.services.attainable.realization import realization_exp, realize
from attainlab.services.attainable.gramian import gramian
from attainlab.services.attainable.subspace import (
    attainable_subspace,
    kalman_subspace,
    subspace_distance,
    subspace_gap,
)
from attainlab.services.attainable.experiment import closure_independence_experiment, free_motion_gap

__all__ = [
    "GramianQuadrature",
    "IndependenceReport",
    "SubspaceBasis",
    "TruncatedRealization",
    "realization_exp",
    "realize",
    "gramian",
    "attainable_subspace",
    "kalman_subspace",
    "subspace_distance",
    "subspace_gap",
    "closure_independence_experiment",
    "free_motion_gap",
]
