"""Gram sections of exponential families and their minimality margins."""
import logging
from typing import List

import numpy as np

from attainlab.services.errors import InvalidArgumentError
from attainlab.services.minimality.integrals import integrate_power_exp
from attainlab.services.minimality.types import ExponentialFamily, QuadratureSpec
from attainlab.services.parallel import ordered_map

logger = logging.getLogger(__name__)

FINITE_SECTION_NOTE = "finite-section evidence, not a proof of minimality of the infinite family"


def _check_sections(fam: ExponentialFamily, n: int) -> None:
    if not 1 <= n <= fam.size:
        raise InvalidArgumentError(f"section size {n} outside 1..{fam.size}")


def family_values(fam: ExponentialFamily, t, n: int = None) -> np.ndarray:
    """
    Evaluate f_1..f_n at the given times.

    Returns:
        Array of shape (len(t), n)
    """
    n = fam.size if n is None else n
    times = np.atleast_1d(np.asarray(t, dtype=np.float64))
    lambdas = fam.eigenvalues[:n]
    powers = fam.powers[:n]
    return (-times[:, None]) ** powers * np.exp(-np.outer(times, lambdas))


def gram_matrix(fam: ExponentialFamily, n: int, quad: QuadratureSpec = QuadratureSpec()) -> np.ndarray:
    """
    Gram section G_ij = int_0^nu f_i(t) conj(f_j(t)) dt.

    Args:
        fam: Exponential family
        n: Section size
        quad: Quadrature settings

    Returns:
        Hermitian n x n matrix
    """
    _check_sections(fam, n)
    lambdas = fam.eigenvalues
    powers = fam.powers
    nu = fam.interval_end
    pairs = [(i, j) for i in range(n) for j in range(i, n)]

    def entry(pair):
        i, j = pair
        sign = (-1.0) ** (powers[i] + powers[j])
        rate = -(lambdas[i] + np.conj(lambdas[j]))
        return sign * integrate_power_exp(int(powers[i] + powers[j]), rate, nu, quad)

    values = ordered_map(entry, pairs)
    gram = np.zeros((n, n), dtype=np.complex128)
    for (i, j), value in zip(pairs, values):
        gram[i, j] = value
        gram[j, i] = np.conj(value)
    gram[np.diag_indices(n)] = gram.diagonal().real
    return gram


def minimality_margin(fam: ExponentialFamily, n: int, quad: QuadratureSpec = QuadratureSpec()) -> float:
    """
    Smallest eigenvalue of the n-th Gram section.

    A positive value shows that f_1..f_n are linearly independent on [0, nu];
    it is finite-section evidence only.
    """
    if n < 1:
        raise InvalidArgumentError("minimality_margin needs n >= 1")
    eigenvalues = np.linalg.eigvalsh(gram_matrix(fam, n, quad))
    return float(eigenvalues[0])


def section_margins(fam: ExponentialFamily, n: int, quad: QuadratureSpec = QuadratureSpec()) -> List[float]:
    """Margins of the nested sections 1..n (non-increasing by interlacing)."""
    gram = gram_matrix(fam, n, quad)
    return [float(np.linalg.eigvalsh(gram[:k, :k])[0]) for k in range(1, n + 1)]


def minimality_verdict(margins: List[float], threshold: float = 0.0) -> str:
    """Human-readable verdict for nested section margins."""
    n = len(margins)
    smallest = min(margins) if margins else float("nan")
    if margins and smallest > threshold:
        return f"sections 1..{n} independent with margin m({n})={margins[-1]:.6g}; {FINITE_SECTION_NOTE}"
    failing = next((k for k, m in enumerate(margins, start=1) if m <= threshold), n)
    return f"section {failing} is numerically dependent (margin {margins[failing - 1]:.3g}); {FINITE_SECTION_NOTE}"
