"""Gauss hypergeometric series 2F1 on the real interval [0, 1).

Only the plain power series is implemented; the parameter triples this
package instantiates, (1/4, 3/4; 1/2) and (1/4, 3/4; 1), never need an
argument near 1, so no transformation formulas are required.
"""

from __future__ import annotations

import math

from .numerics import ConvergenceError, DomainError, PoleError

_MAX_TERMS = 20000

# Pochhammer-ratio coefficients per parameter triple; grown on demand.
_coeff_cache: dict[tuple[float, float, float], list[float]] = {}


def _coefficients(a: float, b: float, c: float, count: int) -> list[float]:
    key = (a, b, c)
    coeffs = _coeff_cache.get(key)
    if coeffs is None:
        if c <= 0.0 and c == int(c):
            raise DomainError(f"c={c} is a non-positive integer")
        coeffs = [1.0]
        _coeff_cache[key] = coeffs
    while len(coeffs) < count:
        n = len(coeffs) - 1
        coeffs.append(coeffs[-1] * (a + n) * (b + n) / ((c + n) * (1.0 + n)))
    return coeffs


def hyp2f1(a: float, b: float, c: float, x: float) -> float:
    """Power series sum of 2F1(a, b; c; x) for 0 <= x < 1.

    Truncates once a term drops below 1e-16 of the partial sum; relative
    error is below 1e-13 for x <= 0.9 with the triples used here.
    """
    if not (0.0 <= x < 1.0):
        raise DomainError(f"series argument must lie in [0, 1), got {x}")
    coeffs = _coefficients(a, b, c, 16)
    total = 1.0
    xn = 1.0
    n = 1
    while n < _MAX_TERMS:
        if n + 2 > len(coeffs):
            coeffs = _coefficients(a, b, c, n + 64)
        xn *= x
        term = coeffs[n] * xn
        total += term
        if abs(term) <= 1e-16 * abs(total):
            return total
        n += 1
    raise ConvergenceError(f"2F1 series did not converge at x={x} within {_MAX_TERMS} terms")


def f_half_closed(z: float) -> float:
    """cos(z/2)/cos(z), the closed form of 2F1(1/4, 3/4; 1/2; sin^2 z)."""
    cz = math.cos(z)
    if abs(cz) < 1e-14:
        raise PoleError(f"cos(z) vanishes at z={z}")
    return math.cos(0.5 * z) / cz


def complete_f(m: float) -> float:
    """2F1(1/4, 3/4; 1; m), the complete value entering every period formula."""
    return hyp2f1(0.25, 0.75, 1.0, m)
