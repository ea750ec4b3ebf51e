"""Finite-dimensional ODE systems x' = diag(lambda) x + B u."""
import logging
from typing import Sequence

import numpy as np

from attainlab.services.errors import InvalidArgumentError
from attainlab.services.spectral.types import ModalSystem, SpectralMode

logger = logging.getLogger(__name__)


def preset_finite(eigenvalues: Sequence[complex], couplings: Sequence[Sequence[complex]], nu: float = 0.0) -> ModalSystem:
    """
    Diagonal finite system; row j of ``couplings`` drives eigenvalue j.

    A finite family of distinct exponentials is minimal on every interval, so
    nu defaults to 0 and every positive horizon is above T + nu.
    """
    rows = np.asarray(couplings, dtype=np.complex128)
    if rows.ndim == 1:
        rows = rows[:, None]
    if len(eigenvalues) != rows.shape[0]:
        raise InvalidArgumentError(f"{len(eigenvalues)} eigenvalues but {rows.shape[0]} coupling rows")
    if nu < 0:
        raise InvalidArgumentError(f"nu must be >= 0, got {nu}")
    modes = [
        SpectralMode(eigenvalue=complex(lam), chain_lengths=(1,), input_coupling=row[None, :])
        for lam, row in zip(eigenvalues, rows)
    ]
    logger.debug(f"Finite preset with {len(modes)} modes and {rows.shape[1]} inputs")
    return ModalSystem.from_modes(modes, input_dim=rows.shape[1], expansion_time=0.0, minimality_interval=float(nu))
