"""Evaluation of Delta(z) with the dominant exponential factored out."""
import logging
import math
from typing import Tuple

import numpy as np

from attainlab.services.errors import InvalidArgumentError, RangeOverflowError
from attainlab.services.quasipoly.types import QuasiPolynomial

logger = logging.getLogger(__name__)

# log of the largest finite double
_LOG_MAX = math.log(np.finfo(np.float64).max)


def scaled_slogdet(q: QuasiPolynomial, zs) -> Tuple[np.ndarray, np.ndarray]:
    """
    Phase and log-magnitude of Delta at an array of points.

    The characteristic matrix is multiplied by e^{-s}, s = max(0, -Re(z) h_max),
    so every exponential entry stays bounded; the determinant is then taken by
    LU with partial pivoting (numpy slogdet) and the scale added back to the log.

    Returns:
        (phase, log_abs): unit complex phases (0 at exact zeros) and log|Delta|
    """
    zs = np.asarray(zs, dtype=np.complex128)
    if not np.all(np.isfinite(zs)):
        raise InvalidArgumentError("Delta is evaluated at finite points only")
    flat = zs.reshape(-1)
    delays = np.asarray(q.delays)
    shift = np.maximum(0.0, -flat.real * q.max_delay)

    identity = np.eye(q.dim, dtype=np.complex128)
    matrices = (flat * np.exp(-shift))[:, None, None] * identity
    # e^{-z h_j - s}, |.| <= 1 for every j
    scaled_exps = np.exp(-np.outer(flat, delays) - shift[:, None])
    for j in range(len(delays)):
        kernel = flat[:, None, None] * q.neutral_coeffs[j] + q.retarded_coeffs[j]
        matrices -= scaled_exps[:, j, None, None] * kernel

    phase, log_abs = np.linalg.slogdet(matrices)
    log_abs = log_abs + q.dim * shift
    return phase.reshape(zs.shape), log_abs.reshape(zs.shape)


def delta_log_abs(q: QuasiPolynomial, z: complex) -> float:
    """log|Delta(z)|, finite for any finite z (-inf at exact zeros)."""
    _, log_abs = scaled_slogdet(q, np.array([z]))
    return float(log_abs[0])


def delta_eval(q: QuasiPolynomial, z: complex) -> complex:
    """
    Evaluate Delta(z).

    Raises:
        RangeOverflowError: if |Delta(z)| exceeds double precision
    """
    phase, log_abs = scaled_slogdet(q, np.array([z]))
    if phase[0] == 0:
        return 0j
    if log_abs[0] > _LOG_MAX:
        raise RangeOverflowError(f"|Delta({z})| ~ e^{log_abs[0]:.1f} overflows double precision")
    return complex(phase[0] * np.exp(log_abs[0]))


def delta_eval_many(q: QuasiPolynomial, zs) -> np.ndarray:
    """Vectorized delta_eval; raises on overflow like the scalar version."""
    phase, log_abs = scaled_slogdet(q, zs)
    if np.any(log_abs > _LOG_MAX):
        raise RangeOverflowError("Delta overflows double precision on the requested points")
    with np.errstate(under="ignore"):
        return phase * np.exp(log_abs)


def delta_derivative(q: QuasiPolynomial, z: complex, step: float = None) -> complex:
    """Central-difference Delta'(z); valid along the real direction since Delta is entire."""
    h = step if step is not None else 1e-6 * (1.0 + abs(z))
    values = delta_eval_many(q, np.array([z + h, z - h]))
    return complex((values[0] - values[1]) / (2.0 * h))
