"""Rank, eigenvector and adjoint-system tests for a single mode."""
import logging

import numpy as np
from scipy.linalg import null_space, solve_triangular

from attainlab.config.settings import RANK_REL_TOL
from attainlab.services.controllability.types import ModeVerdict
from attainlab.services.errors import InvalidArgumentError
from attainlab.services.spectral.types import SpectralMode

logger = logging.getLogger(__name__)


def _check_rel_tol(rel_tol: float) -> None:
    if not 0.0 < rel_tol < 1.0:
        raise InvalidArgumentError(f"rel_tol must lie in (0, 1), got {rel_tol}")


def _shifted(mode: SpectralMode) -> np.ndarray:
    """lambda_j I - Lambda_j, i.e. minus the chain-wise nilpotent part."""
    return mode.eigenvalue * np.eye(mode.beta, dtype=np.complex128) - mode.jordan_matrix()


def rank_condition(mode: SpectralMode, rel_tol: float = RANK_REL_TOL) -> ModeVerdict:
    """
    Rank test on the beta x (beta + r) block [lambda I - Lambda_j | B*Psi_j].

    The numerical rank counts singular values above rel_tol * sigma_max; an
    identically zero block has rank 0. The margin is the beta-th singular value
    over sigma_max when the mode passes, 0 otherwise.
    """
    _check_rel_tol(rel_tol)
    block = np.hstack([_shifted(mode), mode.input_coupling])
    singular_values = np.linalg.svd(block, compute_uv=False)
    largest = float(singular_values[0]) if singular_values.size else 0.0
    if largest == 0.0:
        rank = 0
    else:
        rank = int(np.sum(singular_values > rel_tol * largest))
    passes = rank == mode.beta
    margin = float(singular_values[mode.beta - 1] / largest) if passes else 0.0
    return ModeVerdict(
        mode_index=mode.index,
        eigenvalue=mode.eigenvalue,
        beta=mode.beta,
        rank_found=rank,
        passes=passes,
        margin=margin,
        singular_values=[float(s) for s in singular_values],
    )


def eigen_input_nonvanishing(mode: SpectralMode, abs_tol: float = 0.0) -> bool:
    """True iff the coupling row of every chain's adjoint eigenvector is nonzero."""
    rows = mode.input_coupling[mode.eigenvector_rows()]
    return bool(np.all(np.linalg.norm(rows, axis=1) > abs_tol))


def adjoint_trivial_solution(mode: SpectralMode, rel_tol: float = RANK_REL_TOL) -> bool:
    """
    Whether (lambda I - Lambda_j)^H eta = 0 and (B*Psi_j)^H eta = 0 force eta = 0.

    The two conditions are stacked into a (beta + r) x beta matrix whose null
    space is taken with the same relative cutoff as the rank test.
    """
    _check_rel_tol(rel_tol)
    stacked = np.vstack([_shifted(mode).conj().T, mode.input_coupling.conj().T])
    kernel = null_space(stacked, rcond=rel_tol)
    return kernel.shape[1] == 0


def resolvent_criterion(mode: SpectralMode, mu: complex, rel_tol: float = RANK_REL_TOL) -> ModeVerdict:
    """
    Rank test with the coupling replaced by (mu I - Lambda_j)^{-1} B*Psi_j.

    The resolvent factor is nonsingular and commutes with lambda I - Lambda_j,
    so the verdict matches rank_condition for every mu off the spectrum.
    """
    mu = complex(mu)
    if mu == mode.eigenvalue:
        raise InvalidArgumentError(f"mu={mu} lies on the spectrum")
    shifted = mu * np.eye(mode.beta, dtype=np.complex128) - mode.jordan_matrix()
    scaled = solve_triangular(shifted, mode.input_coupling, lower=False)
    return rank_condition(mode.with_coupling(scaled), rel_tol)
