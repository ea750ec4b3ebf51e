"""
Closed-form solutions of the one-dimensional Dirichlet problem

    w'' = mu^2 w on (0, pi),  w(0) = b1,  w(pi) = b2,

used to turn boundary inputs of the string into modal couplings.
"""
import logging
from typing import Callable, Tuple

import numpy as np

from attainlab.services.errors import InvalidArgumentError

logger = logging.getLogger(__name__)


def check_off_spectrum(mu: complex) -> complex:
    """Reject mu on the string spectrum {0, +-ik}."""
    mu = complex(mu)
    if not np.isfinite(mu.real) or not np.isfinite(mu.imag):
        raise InvalidArgumentError(f"mu must be finite, got {mu}")
    if abs(mu.real) < 1e-12 and abs(mu.imag - round(mu.imag)) < 1e-12:
        raise InvalidArgumentError(f"mu={mu} lies on the spectrum {{0, +-ik}}")
    return mu


def elliptic_solution(mu: complex, boundary: Tuple[float, float]) -> Callable[[np.ndarray], np.ndarray]:
    """
    D_mu b as a vectorized function of theta.

    Args:
        mu: Resolvent parameter off the spectrum
        boundary: Boundary values (b1, b2) at theta = 0 and theta = pi

    Returns:
        Callable theta -> w(theta)
    """
    mu = check_off_spectrum(mu)
    b1, b2 = boundary
    denominator = np.sinh(mu * np.pi)

    def w(theta):
        theta = np.asarray(theta, dtype=np.float64)
        return (b1 * np.sinh(mu * (np.pi - theta)) + b2 * np.sinh(mu * theta)) / denominator

    return w


def sine_projection(mu: complex, boundary: Tuple[float, float], k: int) -> complex:
    """
    int_0^pi w(theta) sin(k theta) d theta.

    Two integrations by parts against w'' = mu^2 w give
    k (b1 - (-1)^k b2) / (mu^2 + k^2).
    """
    if k < 1:
        raise InvalidArgumentError(f"sine index must be >= 1, got {k}")
    mu = check_off_spectrum(mu)
    b1, b2 = boundary
    parity = 1 if k % 2 == 0 else -1
    return k * (b1 - parity * b2) / (mu * mu + k * k)


def mean_value(mu: complex, boundary: Tuple[float, float]) -> complex:
    """(1/pi) int_0^pi w(theta) d theta = (b1 + b2) tanh(mu pi / 2) / (mu pi)."""
    mu = check_off_spectrum(mu)
    b1, b2 = boundary
    return (b1 + b2) * np.tanh(mu * np.pi / 2) / (mu * np.pi)
