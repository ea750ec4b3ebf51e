"""Closure-independence experiment and free-motion check."""
import logging
from typing import Optional, Sequence

import numpy as np

from attainlab.config.settings import GRAMIAN_RANK_TOL, INDEPENDENCE_TOL
from attainlab.services.attainable.realization import realization_exp, realize
from attainlab.services.attainable.subspace import attainable_subspace, kalman_subspace, subspace_gap
from attainlab.services.attainable.types import GramianQuadrature, IndependenceReport
from attainlab.services.errors import InvalidArgumentError
from attainlab.services.parallel import ordered_map
from attainlab.services.spectral.types import ModalSystem

logger = logging.getLogger(__name__)

EVIDENCE_NOTE = "finite-section evidence: agreement of truncated subspaces does not prove equality of closures"


def _check_horizons(horizons: Sequence[float]) -> list:
    values = [float(h) for h in horizons]
    if not values:
        raise InvalidArgumentError("at least one horizon is required")
    if any(not np.isfinite(h) or h <= 0 for h in values):
        raise InvalidArgumentError(f"horizons must be positive and finite: {values}")
    if any(b <= a for a, b in zip(values, values[1:])):
        raise InvalidArgumentError(f"horizons must be strictly increasing: {values}")
    return values


def closure_independence_experiment(
    system: ModalSystem,
    horizons: Sequence[float],
    n: int,
    rank_tol: float = GRAMIAN_RANK_TOL,
    tol: float = INDEPENDENCE_TOL,
    quad: GramianQuadrature = GramianQuadrature(),
    max_workers: Optional[int] = None,
) -> IndependenceReport:
    """
    Compare attainable subspaces of the n-mode truncation across horizons.

    Pairs where both horizons exceed T + nu are expected to coincide; pairs
    involving a shorter horizon are reported but not judged.

    Args:
        system: Modal system
        horizons: Strictly increasing positive horizons
        n: Truncation size
        rank_tol: Gramian rank cutoff
        tol: Largest distance accepted as "same subspace"
        quad: Gramian quadrature settings
        max_workers: Worker threads for the per-horizon Gramians

    Returns:
        IndependenceReport
    """
    values = _check_horizons(horizons)
    real = realize(system, n)
    bases = ordered_map(lambda t: attainable_subspace(real, t, rank_tol, quad), values, max_workers)

    dims = [basis.dimension for basis in bases]
    monotone = all(b >= a for a, b in zip(dims, dims[1:]))
    threshold = system.threshold_time

    count = len(values)
    distances = [[0.0] * count for _ in range(count)]
    verdicts = []
    passed = monotone
    for i in range(count):
        for j in range(i + 1, count):
            dist, dim_i, dim_j = subspace_gap(bases[i], bases[j])
            distances[i][j] = distances[j][i] = dist
            label = f"t={values[i]:g} vs t={values[j]:g}: distance {dist:.3e}"
            if dim_i != dim_j:
                label += f" (dimensions {dim_i} and {dim_j})"
            if values[i] > threshold:
                same = dist <= tol
                passed = passed and same
                verdicts.append(f"{label}: {'independent' if same else 'dependent'}")
            else:
                verdicts.append(f"{label}: not covered (horizon <= T + nu = {threshold:g})")

    notes = [EVIDENCE_NOTE]
    if not monotone:
        notes.append(f"attainable dimension is not monotone in t: {dims}")
    if system.nu_estimated:
        notes.append("threshold T + nu uses an estimated exponential type")

    logger.info(f"Closure experiment on {n} modes: dimensions {dims}, passed={passed}")
    return IndependenceReport(
        horizons=values,
        dimensions=dims,
        distances=distances,
        threshold_time=threshold,
        tolerance=tol,
        rank_tol=rank_tol,
        modes_used=n,
        monotone=monotone,
        pair_verdicts=verdicts,
        passed=passed,
        gramian_spectra=[basis.spectrum for basis in bases],
        kalman_dimension=kalman_subspace(real).shape[1],
        notes=notes,
    )


def free_motion_gap(
    system: ModalSystem,
    t: float,
    n: int,
    rank_tol: float = GRAMIAN_RANK_TOL,
    quad: GramianQuadrature = GramianQuadrature(),
) -> float:
    """
    Largest relative distance of a column of e^{At} from the attainable subspace at t.

    Zero means every free motion from a basis state stays inside the attainable set.
    """
    real = realize(system, n)
    basis = attainable_subspace(real, t, rank_tol, quad).basis
    motion = realization_exp(real, t)
    residual = motion - basis @ (basis.conj().T @ motion)
    norms = np.linalg.norm(motion, axis=0)
    return float(np.max(np.linalg.norm(residual, axis=0) / norms))
