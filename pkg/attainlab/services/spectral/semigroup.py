"""Truncated semigroup S_n(t) in modal coordinates."""
import logging

import numpy as np

from attainlab.services.errors import InvalidArgumentError
from attainlab.services.spectral.jordan import mode_exp
from attainlab.services.spectral.types import ModalSystem, ModalVector

logger = logging.getLogger(__name__)


def modal_vector_norm(v: ModalVector) -> float:
    """Euclidean norm over all blocks."""
    return float(np.linalg.norm(v.to_flat()))


def truncated_semigroup_apply(system: ModalSystem, v: ModalVector, t: float, n: int) -> ModalVector:
    """
    Apply the partial sum S_n(t) = sum_{j<=n} Phi_j exp(Lambda_j t) (v, Psi_j)^T.

    Args:
        system: Modal system
        v: Modal coordinates of the initial state
        t: Time (>= 0)
        n: Number of modes kept

    Returns:
        Modal coordinates of S_n(t)v; blocks beyond n are zero
    """
    if not 1 <= n <= system.size:
        raise InvalidArgumentError(f"truncation index {n} outside 1..{system.size}")
    if not np.isfinite(t) or t < 0:
        raise InvalidArgumentError(f"semigroup time must be finite and >= 0, got {t}")
    v.check_against(system)

    blocks = []
    for position, (mode, block) in enumerate(zip(system.modes, v.blocks)):
        if position < n:
            blocks.append(mode_exp(mode, t) @ block)
        else:
            blocks.append(np.zeros_like(block))
    return ModalVector(blocks=blocks)


def semigroup_property_check(system: ModalSystem, v: ModalVector, t1: float, t2: float, n: int) -> float:
    """
    Deviation from the composition law S_n(t1+t2)v = S_n(t1)S_n(t2)v.

    Returns:
        Largest block-wise Euclidean norm of the difference
    """
    if t1 < 0 or t2 < 0:
        raise InvalidArgumentError("semigroup_property_check needs t1, t2 >= 0")
    direct = truncated_semigroup_apply(system, v, t1 + t2, n)
    composed = truncated_semigroup_apply(system, truncated_semigroup_apply(system, v, t2, n), t1, n)
    deviations = [np.linalg.norm(a - b) for a, b in zip(direct.blocks, composed.blocks)]
    deviation = float(max(deviations, default=0.0))
    logger.debug(f"Semigroup deviation at t1={t1}, t2={t2}, n={n}: {deviation:.3e}")
    return deviation
