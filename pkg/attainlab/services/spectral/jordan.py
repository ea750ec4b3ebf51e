"""Jordan blocks and their exact matrix exponentials."""
import logging
from typing import Union

import numpy as np
from scipy.special import factorial

from attainlab.services.errors import InvalidArgumentError
from attainlab.services.spectral.types import JordanBlockMatrix, SpectralMode

logger = logging.getLogger(__name__)

TimeLike = Union[float, np.ndarray]


def make_jordan_block(eigenvalue: complex, beta: int) -> JordanBlockMatrix:
    """
    Build the Jordan block lambda*I + E of size beta.

    Args:
        eigenvalue: The eigenvalue lambda
        beta: Block size (>= 1)

    Returns:
        JordanBlockMatrix
    """
    if int(beta) != beta or beta < 1:
        raise InvalidArgumentError(f"Jordan block size must be a positive integer, got {beta}")
    return JordanBlockMatrix(eigenvalue=complex(eigenvalue), size=int(beta))


def jordan_exp(block: JordanBlockMatrix, t: TimeLike) -> np.ndarray:
    """
    Exponential of a Jordan block by the finite sum e^{lambda t} sum_k t^k/k! E^k.

    ``t`` may be a scalar or an array of times; an array of shape S gives a
    result of shape S + (beta, beta). The result is upper-triangular Toeplitz
    and exactly the identity at t = 0.
    """
    times = np.asarray(t, dtype=np.float64)
    if not np.all(np.isfinite(times)):
        raise InvalidArgumentError("jordan_exp needs finite times")

    beta = block.size
    powers = np.arange(beta)
    # t^k / k!, shape S + (beta,)
    coefficients = times[..., None] ** powers / factorial(powers)
    offsets = powers[None, :] - powers[:, None]
    upper = offsets >= 0
    toeplitz = np.where(upper, coefficients[..., np.clip(offsets, 0, None)], 0.0)
    return np.exp(block.eigenvalue * times)[..., None, None] * toeplitz


def mode_exp(mode: SpectralMode, t: TimeLike) -> np.ndarray:
    """exp(Lambda_j t) for a mode with one Jordan block per chain."""
    blocks = mode.jordan_blocks()
    if len(blocks) == 1:
        return jordan_exp(blocks[0], t)

    times = np.asarray(t, dtype=np.float64)
    beta = mode.beta
    result = np.zeros(times.shape + (beta, beta), dtype=np.complex128)
    offset = 0
    for block in blocks:
        span = slice(offset, offset + block.size)
        result[..., span, span] = jordan_exp(block, times)
        offset += block.size
    return result

