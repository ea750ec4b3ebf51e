"""Turn computed roots into a ModalSystem."""
import logging
from typing import Optional, Sequence

import numpy as np

from attainlab.config.settings import NU_MARGIN
from attainlab.services.errors import InvalidArgumentError
from attainlab.services.quasipoly.growth import ExponentialTypeEstimate, exponential_type
from attainlab.services.quasipoly.types import QuasiPolynomial, RootCluster
from attainlab.services.spectral.types import ModalSystem, SpectralMode

logger = logging.getLogger(__name__)


def to_modal_system(
    q: QuasiPolynomial,
    roots: Sequence[RootCluster],
    input_couplings: Sequence,
    margin: float = NU_MARGIN,
    estimate: Optional[ExponentialTypeEstimate] = None,
    chain_lengths: Optional[Sequence[Sequence[int]]] = None,
    expansion_time: Optional[float] = None,
) -> ModalSystem:
    """
    Build the modal system of a neutral equation from its roots.

    nu is the exponential type times (1 + margin), so the exponential family is
    minimal on [0, nu]; nu is flagged as estimated. T defaults to the largest
    delay.

    Args:
        q: Quasi-polynomial the roots belong to
        roots: Resolved, pairwise distinct roots
        input_couplings: One (multiplicity x r) coupling block per root
        margin: Relative margin added to the exponential type
        estimate: Precomputed exponential type (computed with defaults if omitted)
        chain_lengths: Jordan chains per root (a single chain of full length by default)
        expansion_time: Onset T (defaults to the largest delay)

    Returns:
        ModalSystem in spectral order
    """
    if len(input_couplings) != len(roots):
        raise InvalidArgumentError(f"{len(roots)} roots but {len(input_couplings)} coupling blocks")
    if chain_lengths is not None and len(chain_lengths) != len(roots):
        raise InvalidArgumentError("chain_lengths needs one entry per root")
    if margin < 0:
        raise InvalidArgumentError("margin must be >= 0")
    if not roots:
        raise InvalidArgumentError("at least one root is required")

    modes = []
    for position, (root, coupling) in enumerate(zip(roots, input_couplings)):
        if not root.resolved:
            raise InvalidArgumentError(f"root near {root.location} is an unresolved cluster")
        block = np.atleast_2d(np.asarray(coupling, dtype=np.complex128))
        if block.shape[0] != root.multiplicity:
            raise InvalidArgumentError(
                f"coupling for root {root.location} has {block.shape[0]} rows, multiplicity is {root.multiplicity}"
            )
        chains = tuple(chain_lengths[position]) if chain_lengths is not None else (root.multiplicity,)
        modes.append(SpectralMode(eigenvalue=root.location, chain_lengths=chains, input_coupling=block))

    locations = [root.location for root in roots]
    for i, a in enumerate(locations):
        for b in locations[i + 1:]:
            if abs(a - b) < 1e-8 * (1.0 + abs(a)):
                raise InvalidArgumentError(f"roots {a} and {b} are not distinct")

    if estimate is None:
        estimate = exponential_type(q)
    nu = max(estimate.omega, 0.0) * (1.0 + margin)
    expansion = q.max_delay if expansion_time is None else float(expansion_time)
    logger.info(f"Modal system from {len(modes)} roots: nu={nu:.6f} (estimated), T={expansion}")
    return ModalSystem.from_modes(
        modes,
        expansion_time=expansion,
        minimality_interval=nu,
        nu_estimated=True,
    )
