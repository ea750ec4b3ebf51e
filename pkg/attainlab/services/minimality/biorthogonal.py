"""Biorthogonal sections and the exponential family of a modal system."""
import logging

import numpy as np
from scipy.linalg import LinAlgError, cho_factor, cho_solve

from attainlab.config.settings import BIORTH_THRESHOLD
from attainlab.services.errors import IllConditionedFamilyError, InvalidArgumentError
from attainlab.services.minimality.gram import gram_matrix
from attainlab.services.minimality.types import BiorthogonalTruncation, ExponentialFamily, QuadratureSpec
from attainlab.services.spectral.types import ModalSystem

logger = logging.getLogger(__name__)


def biorthogonal_truncation(
    fam: ExponentialFamily,
    n: int,
    threshold: float = BIORTH_THRESHOLD,
    quad: QuadratureSpec = QuadratureSpec(),
) -> BiorthogonalTruncation:
    """
    Biorthogonal functions for the first n members of a family.

    With y_j = sum_i C[j, i] conj(f_i), the relations int f_k y_j = delta_jk
    read C G^T = I, so C = (G^T)^{-1} (equal to G^{-1} for real families).
    G is inverted through a Cholesky factorization of its equilibrated form;
    no regularization is applied.

    Raises:
        IllConditionedFamilyError: if the margin is below threshold * largest eigenvalue
    """
    gram = gram_matrix(fam, n, quad)
    eigenvalues = np.linalg.eigvalsh(gram)
    margin, largest = float(eigenvalues[0]), float(eigenvalues[-1])
    if largest <= 0 or margin <= threshold * largest:
        raise IllConditionedFamilyError(
            f"Gram section {n} is ill-conditioned: margin {margin:.3e} <= {threshold:.1e} x {largest:.3e}",
            margin=margin,
            threshold=threshold * max(largest, 0.0),
        )

    scaling = 1.0 / np.sqrt(gram.diagonal().real)
    equilibrated = scaling[:, None] * gram * scaling[None, :]
    try:
        factor = cho_factor(equilibrated, lower=True)
    except LinAlgError as e:
        raise IllConditionedFamilyError(f"Cholesky failed on Gram section {n}: {e}", margin, threshold * largest)
    inverse = scaling[:, None] * cho_solve(factor, np.eye(n, dtype=np.complex128)) * scaling[None, :]

    coefficients = inverse.T
    residual = float(np.max(np.abs(coefficients @ gram.T - np.eye(n))))
    if residual > 1e-8:
        raise IllConditionedFamilyError(
            f"Kronecker residual {residual:.2e} of section {n} exceeds 1e-8", margin, threshold * largest
        )
    logger.info(f"Biorthogonal section {n}: margin {margin:.3e}, residual {residual:.2e}")
    return BiorthogonalTruncation(
        family=fam,
        sections=n,
        coefficients=coefficients,
        gram_condition=largest / margin,
        margin=margin,
        residual=residual,
    )


def family_from_system(system: ModalSystem) -> ExponentialFamily:
    """
    Exponential family {(-t)^k e^{-lambda_j t}} of a modal system on [0, nu].

    Entries follow the mode order, k = 0..alpha_j - 1 within each mode.
    """
    if system.size == 0:
        raise InvalidArgumentError("family_from_system needs a nonempty system")
    if system.minimality_interval <= 0:
        raise InvalidArgumentError("the system's minimality interval nu must be positive")
    entries = [(mode.eigenvalue, k) for mode in system.modes for k in range(mode.beta)]
    return ExponentialFamily(entries=entries, interval_end=system.minimality_interval)
