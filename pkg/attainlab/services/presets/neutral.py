"""Scalar neutral equation x'(t) - a0 x'(t-h) = a1 x(t) + a2 x(t-h) + b u(t)."""
import logging
from typing import Optional, Sequence, Tuple

from attainlab.services.errors import InvalidArgumentError
from attainlab.services.quasipoly.bridge import to_modal_system
from attainlab.services.quasipoly.roots import find_roots
from attainlab.services.quasipoly.types import QuasiPolynomial, Region
from attainlab.services.spectral.types import ModalSystem

logger = logging.getLogger(__name__)


def neutral_quasipolynomial(a0: float, a1: float, a2: float, h: float) -> QuasiPolynomial:
    """Delta(z) = z - a0 z e^{-zh} - a1 - a2 e^{-zh}."""
    if h <= 0:
        raise InvalidArgumentError(f"delay must be positive, got {h}")
    return QuasiPolynomial.scalar(delays=[0.0, h], neutral=[0.0, a0], retarded=[a1, a2])


def preset_neutral(
    a0: float = 0.5,
    a1: float = -1.0,
    a2: float = 0.2,
    h: float = 1.0,
    region: Tuple[float, float, float, float] = (-2.0, 1.0, -10.0, 10.0),
    couplings: Optional[Sequence] = None,
) -> ModalSystem:
    """
    Modal system of the scalar neutral equation from the roots inside ``region``.

    Couplings cannot be derived from Delta alone; without them every root gets a
    unit coupling of its multiplicity. T is the delay h.

    Args:
        a0: Neutral coefficient
        a1: Undelayed coefficient
        a2: Delayed coefficient
        h: Delay
        region: Search rectangle (re_min, re_max, im_min, im_max)
        couplings: One coupling block per root, in spectral order

    Returns:
        ModalSystem with an estimated nu
    """
    q = neutral_quasipolynomial(a0, a1, a2, h)
    roots = find_roots(q, Region(re_min=region[0], re_max=region[1], im_min=region[2], im_max=region[3]))
    if not roots:
        raise InvalidArgumentError(f"no roots of the neutral equation in {region}")
    if couplings is None:
        couplings = [[[1.0]] * root.multiplicity for root in roots]
    logger.info(f"Neutral preset: {len(roots)} roots in {region}")
    return to_modal_system(q, roots, couplings, expansion_time=h)
