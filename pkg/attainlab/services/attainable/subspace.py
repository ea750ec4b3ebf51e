"""Attainable subspaces and distances between them."""
import logging
from typing import Tuple, Union

import numpy as np
from scipy.linalg import eigh, qr, svdvals

from attainlab.config.settings import GRAMIAN_RANK_TOL
from attainlab.services.attainable.gramian import gramian
from attainlab.services.attainable.types import GramianQuadrature, SubspaceBasis, TruncatedRealization
from attainlab.services.errors import InvalidArgumentError

logger = logging.getLogger(__name__)

BasisLike = Union[SubspaceBasis, np.ndarray]


def attainable_subspace(
    real: TruncatedRealization,
    t: float,
    rank_tol: float = GRAMIAN_RANK_TOL,
    quad: GramianQuadrature = GramianQuadrature(),
) -> SubspaceBasis:
    """
    Orthonormal basis of the range of the Gramian at horizon t.

    Eigenvectors whose eigenvalue exceeds rank_tol times the largest one are kept,
    ordered by decreasing eigenvalue. A zero Gramian yields an empty basis.

    Args:
        real: Finite realization
        t: Horizon, positive
        rank_tol: Relative eigenvalue cutoff in (0, 1)
        quad: Gramian quadrature settings

    Returns:
        SubspaceBasis
    """
    if not 0 < rank_tol < 1:
        raise InvalidArgumentError(f"rank tolerance must lie in (0, 1), got {rank_tol}")
    G = gramian(real, t, quad)
    values, vectors = eigh(G)
    values = values[::-1]
    vectors = vectors[:, ::-1]
    largest = values[0] if values.size else 0.0
    if largest <= 0:
        basis = np.zeros((real.state_dim, 0), dtype=np.complex128)
    else:
        basis = vectors[:, values > rank_tol * largest]
    logger.debug(f"Attainable subspace at t={t}: dimension {basis.shape[1]} of {real.state_dim}")
    return SubspaceBasis(basis=basis, spectrum=[float(v) for v in values], rank_tol=rank_tol)


def _as_matrix(basis: BasisLike) -> np.ndarray:
    if isinstance(basis, SubspaceBasis):
        return np.asarray(basis.basis)
    return np.asarray(basis)


def subspace_gap(u: BasisLike, v: BasisLike) -> Tuple[float, int, int]:
    """
    Distance between spans of orthonormal bases u and v, with both dimensions.

    Either argument may be a SubspaceBasis or a matrix with orthonormal columns.
    """
    u, v = _as_matrix(u), _as_matrix(v)
    if u.shape[0] != v.shape[0]:
        raise InvalidArgumentError(f"bases live in different spaces: {u.shape[0]} vs {v.shape[0]}")
    dim_u, dim_v = u.shape[1], v.shape[1]
    if dim_u != dim_v:
        return 1.0, dim_u, dim_v
    if dim_u == 0:
        return 0.0, 0, 0
    residual = v - u @ (u.conj().T @ v)
    largest = svdvals(residual)[0]
    return float(np.clip(largest, 0.0, 1.0)), dim_u, dim_v


def subspace_distance(u: BasisLike, v: BasisLike) -> float:
    """
    Sine of the largest principal angle between two spans.

    Spans of different dimension are at distance 1.
    """
    return subspace_gap(u, v)[0]


def kalman_subspace(real: TruncatedRealization, tol: float = 1e-10) -> np.ndarray:
    """
    Controllable subspace of (A, B) by Krylov expansion with pivoted QR.

    A is scaled by its spectral radius so that the rank test sees comparable columns.
    """
    A = real.A_matrix / max(1.0, real.spectral_radius)
    B = real.B_matrix
    if not np.any(B):
        return np.zeros((real.state_dim, 0), dtype=np.complex128)

    Q, R, _ = qr(B, mode="economic", pivoting=True)
    rank = int(np.sum(np.abs(np.diag(R)) > tol * np.abs(R[0, 0])))
    U = Q[:, :rank]
    while rank < real.state_dim:
        Q, R, _ = qr(np.hstack((U, A @ U)), mode="economic", pivoting=True)
        new_rank = int(np.sum(np.abs(np.diag(R)) > tol * np.abs(R[0, 0])))
        if new_rank == rank:
            break
        U = Q[:, :new_rank]
        rank = new_rank
    return U
