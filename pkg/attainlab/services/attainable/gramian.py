"""Controllability Gramians by Gauss-Legendre panels."""
import logging
import math

import numpy as np
from numpy.polynomial.legendre import leggauss

from attainlab.services.attainable.realization import propagated_inputs
from attainlab.services.attainable.types import GramianQuadrature, TruncatedRealization
from attainlab.services.errors import InvalidArgumentError, QuadratureError

logger = logging.getLogger(__name__)


def _panel_sum(real: TruncatedRealization, t: float, panels: int, nodes: int) -> np.ndarray:
    x, w = leggauss(nodes)
    edges = np.linspace(0.0, t, panels + 1)
    half = 0.5 * np.diff(edges)
    middle = 0.5 * (edges[:-1] + edges[1:])
    times = (middle[:, None] + half[:, None] * x[None, :]).ravel()
    weights = (half[:, None] * w[None, :]).ravel()
    inputs = propagated_inputs(real, times)
    return np.einsum("n,nir,njr->ij", weights, inputs, inputs.conj())


def gramian(real: TruncatedRealization, t: float, quad: GramianQuadrature = GramianQuadrature()) -> np.ndarray:
    """
    G(t) = int_0^t e^{As} B B^H e^{A^H s} ds.

    Panel count starts at max(min_panels, ceil(4 t max|lambda|)) and doubles
    until the relative change drops below quad.rel_change. The result is
    symmetrized to be exactly Hermitian.

    Raises:
        QuadratureError: if panel doubling does not converge
    """
    if not np.isfinite(t) or t <= 0:
        raise InvalidArgumentError(f"Gramian horizon must be positive, got {t}")

    panels = max(quad.min_panels, math.ceil(4.0 * t * real.spectral_radius))
    current = _panel_sum(real, t, panels, quad.nodes_per_panel)
    history = []
    for _ in range(quad.max_doublings):
        panels *= 2
        refined = _panel_sum(real, t, panels, quad.nodes_per_panel)
        scale = np.linalg.norm(refined)
        change = np.linalg.norm(refined - current) / scale if scale > 0 else 0.0
        history.append({"panels": panels, "relative_change": float(change)})
        current = refined
        if change <= quad.rel_change:
            logger.debug(f"Gramian at t={t} converged with {panels} panels (change {change:.2e})")
            return 0.5 * (current + current.conj().T)
    raise QuadratureError(f"Gramian at t={t} did not converge after {quad.max_doublings} doublings", {"history": history})
