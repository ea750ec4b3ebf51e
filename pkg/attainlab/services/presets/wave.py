"""Boundary-controlled string: u_tt = u_xx on (0, pi), control at both ends."""
import logging
from typing import Tuple

import numpy as np

from attainlab.services.errors import InvalidArgumentError
from attainlab.services.presets.elliptic import check_off_spectrum, mean_value, sine_projection
from attainlab.services.spectral.types import ModalSystem, SpectralMode

logger = logging.getLogger(__name__)

WAVE_MINIMALITY_INTERVAL = 2.0 * np.pi


def _oscillation_coupling(mu: complex, boundary: Tuple[float, float], k: int, sign: int) -> complex:
    # modal coordinate of D_mu b on the eigenpair +-ik, times (mu - lambda)
    lam = sign * 1j * k
    coordinate = (2.0 / np.pi) * sine_projection(mu, boundary, k)
    return coordinate * (mu - lam) * (mu + lam) / (2.0 * lam)


def preset_wave(K: int, mu: float = 0.5, boundary: Tuple[float, float] = (1.0, 1.0)) -> ModalSystem:
    """
    Spectral truncation of the string with Dirichlet boundary control.

    Modes are lambda = 0 and lambda = +-ik for k = 1..K, all simple, one input.
    Couplings come from the elliptic solution D_mu b projected on each mode; the
    result does not depend on mu for the oscillating modes. The lambda = 0 mode
    is the mean displacement; its coupling mu * mean(D_mu b) is a modeling
    choice rather than a modal projection and changes with mu. It vanishes only
    when b1 + b2 = 0, whatever mu is, so verdicts do not depend on mu.

    Args:
        K: Highest wave number (K >= 1)
        mu: Resolvent parameter, off the spectrum
        boundary: Boundary values (b1, b2)

    Returns:
        ModalSystem with 2K + 1 modes, T = 0 and nu = 2 pi
    """
    if int(K) != K or K < 1:
        raise InvalidArgumentError(f"K must be an integer >= 1, got {K}")
    if len(boundary) != 2:
        raise InvalidArgumentError("boundary needs exactly two values")
    mu = check_off_spectrum(mu)
    b = (float(boundary[0]), float(boundary[1]))

    modes = [
        SpectralMode(
            eigenvalue=0j,
            chain_lengths=(1,),
            input_coupling=np.array([[mu * mean_value(mu, b)]]),
        )
    ]
    for k in range(1, int(K) + 1):
        for sign in (-1, 1):
            modes.append(
                SpectralMode(
                    eigenvalue=sign * 1j * k,
                    chain_lengths=(1,),
                    input_coupling=np.array([[_oscillation_coupling(mu, b, k, sign)]]),
                )
            )

    logger.info(f"Wave preset: K={K}, mu={mu}, boundary={b}, {len(modes)} modes")
    return ModalSystem.from_modes(
        modes,
        input_dim=1,
        expansion_time=0.0,
        minimality_interval=WAVE_MINIMALITY_INTERVAL,
    )
