"""Types for finite realizations and attainable subspaces."""
from typing import List, Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from attainlab.services.spectral.types import SpectralMode


class TruncatedRealization(BaseModel):
    """Finite system (A, B) built from the first n modes: A block diagonal in Jordan form."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    modes: Tuple[SpectralMode, ...]
    state_dim: int
    A_matrix: np.ndarray
    B_matrix: np.ndarray

    @property
    def input_dim(self) -> int:
        return self.B_matrix.shape[1]

    @property
    def block_offsets(self) -> List[int]:
        offsets = [0]
        for mode in self.modes:
            offsets.append(offsets[-1] + mode.beta)
        return offsets

    @property
    def spectral_radius(self) -> float:
        return max((abs(mode.eigenvalue) for mode in self.modes), default=0.0)


class GramianQuadrature(BaseModel):
    """Gauss-Legendre panel settings for the Gramian integral."""

    model_config = ConfigDict(frozen=True)

    nodes_per_panel: int = Field(8, ge=2)
    min_panels: int = Field(16, ge=1)
    rel_change: float = Field(1e-10, gt=0)
    max_doublings: int = Field(6, ge=1)


class SubspaceBasis(BaseModel):
    """Orthonormal basis of the numerically attainable subspace."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    basis: np.ndarray
    spectrum: List[float]
    rank_tol: float

    @property
    def dimension(self) -> int:
        return self.basis.shape[1]

    @property
    def ambient_dim(self) -> int:
        return self.basis.shape[0]


class IndependenceReport(BaseModel):
    """Pairwise comparison of attainable subspaces across horizons."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    horizons: List[float]
    dimensions: List[int]
    distances: List[List[float]]
    threshold_time: float
    tolerance: float
    rank_tol: float
    modes_used: int
    monotone: bool
    pair_verdicts: List[str]
    passed: bool
    gramian_spectra: List[List[float]]
    kalman_dimension: Optional[int] = None
    notes: List[str] = Field(default_factory=list)
