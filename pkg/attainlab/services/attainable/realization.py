"""Finite realizations of spectral truncations."""
import logging

import numpy as np
from scipy.linalg import block_diag

from attainlab.services.attainable.types import TruncatedRealization
from attainlab.services.errors import InvalidArgumentError
from attainlab.services.spectral.jordan import mode_exp
from attainlab.services.spectral.types import ModalSystem

logger = logging.getLogger(__name__)


def realize(system: ModalSystem, n: int) -> TruncatedRealization:
    """
    Assemble the first n modes into one finite system.

    Args:
        system: Modal system
        n: Number of modes (1 <= n <= mode count)

    Returns:
        TruncatedRealization with block-diagonal A and stacked B
    """
    if not 1 <= n <= system.size:
        raise InvalidArgumentError(f"realization size {n} outside 1..{system.size}")
    modes = system.modes[:n]
    A = block_diag(*[mode.jordan_matrix() for mode in modes]).astype(np.complex128)
    B = np.vstack([mode.input_coupling for mode in modes]).astype(np.complex128)
    A.setflags(write=False)
    B.setflags(write=False)
    logger.debug(f"Realized {n} modes: state dimension {A.shape[0]}, {B.shape[1]} inputs")
    return TruncatedRealization(modes=modes, state_dim=A.shape[0], A_matrix=A, B_matrix=B)


def realization_exp(real: TruncatedRealization, t) -> np.ndarray:
    """
    e^{At} from the per-mode Jordan exponentials.

    ``t`` may be an array; the result then has shape t.shape + (d, d).
    """
    times = np.asarray(t, dtype=np.float64)
    result = np.zeros(times.shape + (real.state_dim, real.state_dim), dtype=np.complex128)
    offsets = real.block_offsets
    for mode, start, stop in zip(real.modes, offsets[:-1], offsets[1:]):
        result[..., start:stop, start:stop] = mode_exp(mode, times)
    return result


def propagated_inputs(real: TruncatedRealization, times: np.ndarray) -> np.ndarray:
    """e^{As} B at every time, shape (len(times), d, r)."""
    result = np.zeros((times.size, real.state_dim, real.input_dim), dtype=np.complex128)
    offsets = real.block_offsets
    for mode, start, stop in zip(real.modes, offsets[:-1], offsets[1:]):
        result[:, start:stop, :] = mode_exp(mode, times) @ mode.input_coupling
    return result
