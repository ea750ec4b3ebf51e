"""Closed-form and adaptive integrals of t^m e^{a t} over [0, nu]."""
import logging

import numpy as np
from scipy import integrate

from attainlab.services.errors import QuadratureError, RangeOverflowError
from attainlab.services.minimality.types import QuadratureSpec

logger = logging.getLogger(__name__)

_SERIES_TERMS = 80


def _series(m: int, c: complex) -> complex:
    # int_0^1 s^m e^{cs} ds = sum_n c^n / (n! (m+n+1)), used for |c| <= 1
    total = 0j
    term = 1.0 + 0j
    for n in range(_SERIES_TERMS):
        if n > 0:
            term *= c / n
        contribution = term / (m + n + 1)
        total += contribution
        if abs(contribution) <= 1e-18 * max(abs(total), 1e-300):
            break
    return total


def _forward_recursion(m: int, c: complex) -> complex:
    # J_k = (e^c - k J_{k-1}) / c, stable for |c| > m
    exp_c = np.exp(c)
    if not np.isfinite(exp_c):
        raise RangeOverflowError(f"e^{c} overflows while integrating t^{m} e^(at)")
    value = (exp_c - 1.0) / c
    for k in range(1, m + 1):
        value = (exp_c - k * value) / c
    return complex(value)


def _adaptive(m: int, c: complex, quad: QuadratureSpec) -> complex:
    parts = []
    for part in (np.real, np.imag):
        value, error, info = integrate.quad(
            lambda s: part(s**m * np.exp(c * s)),
            0.0,
            1.0,
            epsabs=quad.epsabs,
            epsrel=quad.epsrel,
            limit=quad.limit,
            full_output=1,
        )[:3]
        if error > max(1e-12, 100 * quad.epsrel * abs(value)):
            used = info.get("last", 0)
            worst = int(np.argmax(info["elist"][:used])) if used else 0
            diagnostics = {
                "power": m,
                "exponent": [c.real, c.imag],
                "error": float(error),
                "worst_subinterval": [float(info["alist"][worst]), float(info["blist"][worst])] if used else None,
            }
            raise QuadratureError(f"adaptive quadrature did not converge for t^{m} e^({c} s)", diagnostics)
        parts.append(value)
    return complex(parts[0], parts[1])


def integrate_power_exp(m: int, a: complex, nu: float, quad: QuadratureSpec = QuadratureSpec()) -> complex:
    """
    Integral of t^m e^{a t} over [0, nu].

    Scaled to the unit interval with c = a nu. Small |c| uses the power series,
    |c| > m uses the forward recursion of integration by parts, and the
    remaining band (1 < |c| <= m) falls back to adaptive quadrature.

    Args:
        m: Nonnegative power
        a: Complex exponent rate
        nu: Interval end (> 0)
        quad: Quadrature settings

    Returns:
        The integral as a complex number
    """
    c = complex(a) * nu
    scale = nu ** (m + 1)
    if quad.method == "adaptive":
        return scale * _adaptive(m, c, quad)
    if c == 0:
        return complex(scale / (m + 1))
    if abs(c) <= 1.0:
        return scale * _series(m, c)
    if abs(c) > m:
        return scale * _forward_recursion(m, c)
    return scale * _adaptive(m, c, quad)

