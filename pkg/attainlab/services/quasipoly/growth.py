"""Exponential type of Delta estimated by directional sampling."""
import logging
from typing import List, Sequence

import numpy as np
from pydantic import BaseModel, ConfigDict

from attainlab.services.errors import InvalidArgumentError
from attainlab.services.quasipoly.delta import scaled_slogdet
from attainlab.services.quasipoly.types import QuasiPolynomial

logger = logging.getLogger(__name__)

DEFAULT_RADII = (50.0, 100.0, 200.0)
DEFAULT_DIRECTIONS = 64


class ExponentialTypeEstimate(BaseModel):
    """Growth exponent omega sampled on circles; always an estimate."""

    model_config = ConfigDict(frozen=True)

    omega: float
    spread: float
    radii: List[float]
    per_radius: List[float]
    directions: int
    estimated: bool = True


def exponential_type(
    q: QuasiPolynomial,
    radii: Sequence[float] = DEFAULT_RADII,
    directions: int = DEFAULT_DIRECTIONS,
) -> ExponentialTypeEstimate:
    """
    Estimate omega = limsup (1/|z|) log|Delta(z)|.

    For each radius r the maximum of (1/r) log|Delta(r e^{i theta})| over evenly
    spaced directions (theta = pi included) is taken; log|Delta| comes from the
    scaled determinant, so large radii never overflow.

    Args:
        q: Quasi-polynomial
        radii: Increasing radii, at least two
        directions: Number of sampled directions (>= 8)

    Returns:
        Estimate at the largest radius, with the spread between the two largest radii
    """
    radii = [float(r) for r in radii]
    if len(radii) < 2:
        raise InvalidArgumentError("exponential_type needs at least two radii")
    if any(r <= 0 for r in radii) or any(b <= a for a, b in zip(radii, radii[1:])):
        raise InvalidArgumentError(f"radii must be positive and increasing, got {radii}")
    if directions < 8:
        raise InvalidArgumentError("exponential_type needs at least 8 directions")

    thetas = -np.pi + 2.0 * np.pi * np.arange(directions) / directions
    per_radius = []
    for r in radii:
        _, log_abs = scaled_slogdet(q, r * np.exp(1j * thetas))
        finite = log_abs[np.isfinite(log_abs)]
        per_radius.append(float(np.max(finite) / r) if finite.size else float("-inf"))

    omega = per_radius[-1]
    spread = abs(per_radius[-1] - per_radius[-2])
    logger.info(f"Exponential type estimate {omega:.6f} (spread {spread:.2e}) at radius {radii[-1]}")
    return ExponentialTypeEstimate(
        omega=omega,
        spread=spread,
        radii=radii,
        per_radius=per_radius,
        directions=directions,
    )
