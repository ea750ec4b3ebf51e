"""
Root localization by the argument principle.

The winding number of Delta around a rectangle is read off by unwrapping the
phase of Delta along the boundary; segments whose phase jump is too large to
be trusted are bisected until the increments are small. Rectangles with a
nonzero count are subdivided until Newton's method (with the local count as
multiplicity) lands inside them.
"""
import logging
import math
from typing import List, Optional, Tuple

import numpy as np

from attainlab.config.settings import ROOT_TOL
from attainlab.services.errors import BoundaryTooCloseError, InvalidArgumentError, RangeOverflowError
from attainlab.services.quasipoly.delta import delta_derivative, delta_eval, delta_log_abs, scaled_slogdet
from attainlab.services.quasipoly.types import QuasiPolynomial, Region, RootCluster
from attainlab.services.spectral.types import spectral_sort_key

logger = logging.getLogger(__name__)

_MAX_PHASE_STEP = math.pi / 4
_INITIAL_POINTS_PER_EDGE = 32
_MAX_BOUNDARY_POINTS = 200_000
_SPLIT_FRACTIONS = (0.5123, 0.4687, 0.5391, 0.4419)


def _boundary_parameters(region: Region, count: int) -> np.ndarray:
    # perimeter parameter in [0, 4): one unit per edge, counterclockwise
    return np.linspace(0.0, 4.0, 4 * count, endpoint=False)


def _boundary_points(region: Region, params: np.ndarray) -> np.ndarray:
    a, b, c, d = region.as_tuple()
    edge = np.minimum(np.floor(params).astype(int), 3)
    frac = params - edge
    re = np.select(
        [edge == 0, edge == 1, edge == 2, edge == 3],
        [a + frac * (b - a), np.full_like(frac, b), b - frac * (b - a), np.full_like(frac, a)],
    )
    im = np.select(
        [edge == 0, edge == 1, edge == 2, edge == 3],
        [np.full_like(frac, c), c + frac * (d - c), np.full_like(frac, d), d - frac * (d - c)],
    )
    return re + 1j * im


def winding_number(q: QuasiPolynomial, region: Region) -> float:
    """
    Number of roots (with multiplicity) inside the rectangle.

    Raises:
        BoundaryTooCloseError: if a root lies on the boundary or the phase cannot
            be resolved with the sampling budget
    """
    params = _boundary_parameters(region, _INITIAL_POINTS_PER_EDGE)
    min_step = 1e-9

    while True:
        points = _boundary_points(region, params)
        phase, log_abs = scaled_slogdet(q, points)
        if np.any(phase == 0):
            raise BoundaryTooCloseError(
                f"Delta vanishes on the boundary of {region.as_tuple()}", region.as_tuple(), 0.0
            )
        angles = np.angle(phase)
        increments = np.angle(np.exp(1j * (np.roll(angles, -1) - angles)))
        widths = np.diff(np.append(params, 4.0))
        coarse = np.abs(increments) > _MAX_PHASE_STEP
        if not np.any(coarse):
            break

        stuck = coarse & (widths <= min_step)
        if np.any(stuck) or params.size > _MAX_BOUNDARY_POINTS:
            min_abs = float(np.exp(np.min(log_abs)))
            raise BoundaryTooCloseError(
                f"phase of Delta cannot be resolved on the boundary of {region.as_tuple()}; perturb the region",
                region.as_tuple(),
                min_abs,
            )
        midpoints = params[coarse] + 0.5 * widths[coarse]
        params = np.sort(np.concatenate([params, midpoints]))

    winding = float(np.sum(increments) / (2.0 * math.pi))
    logger.debug(f"Winding number on {region.as_tuple()}: {winding:.6f} ({params.size} samples)")
    return winding


def _count(q: QuasiPolynomial, region: Region) -> int:
    winding = winding_number(q, region)
    count = int(round(winding))
    if abs(winding - count) > 1e-3:
        raise BoundaryTooCloseError(
            f"non-integer winding {winding:.6f} on {region.as_tuple()}", region.as_tuple(), float("nan")
        )
    return count


def _newton_polish(
    q: QuasiPolynomial, start: complex, multiplicity: int, max_iter: int = 100
) -> Tuple[Optional[complex], float]:
    """Modified Newton z <- z - m Delta/Delta'. Returns (root or None, residual)."""
    z = complex(start)
    for _ in range(max_iter):
        try:
            value = delta_eval(q, z)
            if value == 0:
                return z, 0.0
            slope = delta_derivative(q, z)
        except RangeOverflowError:
            return None, float("inf")
        if slope == 0 or not np.isfinite(slope):
            return None, abs(value)
        step = multiplicity * value / slope
        z -= step
        if not np.isfinite(z):
            return None, float("inf")
        if abs(step) <= 1e-15 * (1.0 + abs(z)):
            break
    try:
        residual = abs(delta_eval(q, z))
    except RangeOverflowError:
        return None, float("inf")
    return z, residual


def _subdivide(q: QuasiPolynomial, region: Region, count: int) -> List[Tuple[Region, int]]:
    last_error = None
    for fraction in _SPLIT_FRACTIONS:
        children = region.split(fraction)
        try:
            counts = [_count(q, child) for child in children]
        except BoundaryTooCloseError as e:
            last_error = e
            continue
        if sum(counts) != count:
            logger.warning(f"Child counts {counts} do not add up to {count} on {region.as_tuple()}")
            continue
        return [(child, n) for child, n in zip(children, counts) if n > 0]
    if last_error is not None:
        raise last_error
    raise BoundaryTooCloseError(f"could not split {region.as_tuple()} consistently", region.as_tuple(), float("nan"))


def _try_cluster(q: QuasiPolynomial, region: Region, count: int, tol: float) -> Optional[RootCluster]:
    root, residual = _newton_polish(q, region.center, count)
    if root is None or not region.contains(root):
        return None
    converged = residual <= tol
    if count > 1:
        # every root of the rectangle must sit in a tiny square around the polished point
        half_width = 1e-4 * (1.0 + abs(root))
        try:
            local = _count(q, Region.square(root, half_width))
        except BoundaryTooCloseError:
            return None
        if local != count:
            return None
    if converged:
        return RootCluster(location=root, multiplicity=count, residual=residual, resolved=True)
    # stalled above tol: keep it only as an unresolved local minimum of |Delta|
    ring = root + 1e-3 * np.exp(2j * np.pi * np.arange(16) / 16)
    _, ring_log = scaled_slogdet(q, ring)
    if residual <= 0 or math.log(residual) >= float(np.min(ring_log)) - math.log(1e3):
        return None
    logger.warning(f"Root near {root} stalled at residual {residual:.3e} above tol {tol:.1e}")
    return RootCluster(location=root, multiplicity=count, residual=residual, resolved=False)


def find_roots(
    q: QuasiPolynomial,
    region: Region,
    tol: float = ROOT_TOL,
    max_depth: int = 40,
) -> List[RootCluster]:
    """
    All roots of Delta inside a rectangle, with multiplicities.

    Args:
        q: Quasi-polynomial
        region: Search rectangle; its boundary must avoid roots
        tol: Residual tolerance for polished roots
        max_depth: Subdivision limit; rectangles still ambiguous there become
            unresolved clusters

    Returns:
        Root clusters in spectral order. A cluster is resolved only when its
        residual is within tol; inner rectangles that cannot be split cleanly
        are reported as unresolved clusters.

    Raises:
        BoundaryTooCloseError: the outer boundary is too close to a root
    """
    if tol <= 0:
        raise InvalidArgumentError("tol must be positive")
    total = _count(q, region)
    logger.info(f"Region {region.as_tuple()} encloses {total} roots")

    clusters: List[RootCluster] = []
    pending = [(region, total, 0)] if total > 0 else []
    while pending:
        rect, count, depth = pending.pop()
        cluster = _try_cluster(q, rect, count, tol)
        if cluster is not None:
            clusters.append(cluster)
            continue
        if depth >= max_depth:
            residual = math.exp(min(delta_log_abs(q, rect.center), 700.0))
            logger.warning(f"Unresolved cluster of {count} roots near {rect.center}")
            clusters.append(RootCluster(location=rect.center, multiplicity=count, residual=residual, resolved=False))
            continue
        try:
            children = _subdivide(q, rect, count)
        except BoundaryTooCloseError as e:
            residual = math.exp(min(delta_log_abs(q, rect.center), 700.0))
            logger.warning(f"Cannot split {rect.as_tuple()} ({e}); keeping {count} roots as one unresolved cluster")
            clusters.append(RootCluster(location=rect.center, multiplicity=count, residual=residual, resolved=False))
            continue
        for child, child_count in children:
            pending.append((child, child_count, depth + 1))

    merged = _merge_clusters(clusters)
    if sum(c.multiplicity for c in merged) != total:
        logger.warning(f"Recovered multiplicities {sum(c.multiplicity for c in merged)} differ from winding {total}")
    return sorted(merged, key=lambda c: spectral_sort_key(c.location))


def _merge_clusters(clusters: List[RootCluster]) -> List[RootCluster]:
    merged: List[RootCluster] = []
    for cluster in sorted(clusters, key=lambda c: spectral_sort_key(c.location)):
        for position, kept in enumerate(merged):
            if abs(kept.location - cluster.location) < 1e-8 * (1.0 + abs(kept.location)):
                merged[position] = RootCluster(
                    location=kept.location,
                    multiplicity=kept.multiplicity + cluster.multiplicity,
                    residual=max(kept.residual, cluster.residual),
                    resolved=kept.resolved and cluster.resolved,
                )
                break
        else:
            merged.append(cluster)
    return merged
