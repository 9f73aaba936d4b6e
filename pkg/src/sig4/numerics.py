"""Shared numeric kernels.

Three scalar building blocks used throughout the package:

* tanh-sinh (double-exponential) quadrature, tolerant of inverse
  square-root endpoint singularities,
* a safeguarded bracketed root finder,
* the depressed cubic ``4 t^3 - g2 t - g3`` solved by the trigonometric
  (Viete) method for the three-real-root regime.

Everything here is a pure function over value types and safe for
concurrent use.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

#: library-wide default absolute tolerance
DEFAULT_TOL = 1e-12

_MAX_LEVEL = 12
_UMAX = 5.0  # abscissa cutoff; weights below ~1e-100 there


class DomainError(ValueError):
    """Input outside the supported domain."""


class ConvergenceError(RuntimeError):
    """An iterative scheme failed to reach the requested tolerance."""


class PoleError(ArithmeticError):
    """Evaluation requested at, or too close to, a pole."""


class UnsupportedLatticeError(DomainError):
    """Invariants outside the real rectangular-lattice regime."""


@dataclass(frozen=True)
class Interval:
    """Closed integration/bracketing interval with ``lo < hi``."""

    lo: float
    hi: float

    def __post_init__(self) -> None:
        if not (self.lo < self.hi):
            raise DomainError(f"interval requires lo < hi, got [{self.lo}, {self.hi}]")

    @property
    def length(self) -> float:
        return self.hi - self.lo


# --------------------------------------------------------------------------
# tanh-sinh quadrature
#
# Under x = m + (L/2) tanh((pi/2) sinh u) the trapezoid rule in u converges
# doubly exponentially, and the weights decay fast enough to swallow
# integrable endpoint singularities such as (x - a)^(-1/2).  Nodes are
# stored as (fraction-of-length from the nearer endpoint, weight) so the
# abscissae can be formed without cancellation.

_node_cache: dict[int, list[tuple[float, float]]] = {}


def _level_nodes(level: int) -> list[tuple[float, float]]:
    """Positive-u abscissae newly introduced at this refinement level."""
    cached = _node_cache.get(level)
    if cached is not None:
        return cached
    h = 0.5 ** level
    if level == 0:
        us = [k * h for k in range(1, int(_UMAX / h) + 1)]
    else:
        us = [k * h for k in range(1, int(_UMAX / h) + 1, 2)]
    nodes = []
    for u in us:
        s = 0.5 * math.pi * math.sinh(u)
        q = math.exp(-2.0 * s)
        frac = q / (1.0 + q)  # distance to the nearer endpoint, / length
        weight = 2.0 * math.pi * math.cosh(u) * q / (1.0 + q) ** 2
        nodes.append((frac, weight))
    _node_cache[level] = nodes
    return nodes


def integrate(f: Callable[[float], float], iv: Interval, tol: float = DEFAULT_TOL) -> float:
    """Integrate ``f`` over ``iv`` to absolute tolerance ``tol``.

    The integrand may blow up like an inverse square root at either
    endpoint.  For full accuracy with a singular endpoint, arrange the
    problem so the singularity sits at 0: offsets from a nonzero endpoint
    are limited by the spacing of floating-point numbers near it, whereas
    offsets from 0 resolve down to the subnormal range.  Nodes that would
    collapse onto an endpoint are skipped.

    Raises ConvergenceError if level-to-level refinement has not settled
    below ``tol`` after the maximum refinement level.
    """
    if tol <= 0.0:
        raise DomainError("tol must be positive")
    a, b = iv.lo, iv.hi
    length = b - a
    half = 0.5 * length

    def shell_sum(nodes: list[tuple[float, float]]) -> float:
        s = 0.0
        for frac, weight in nodes:
            delta = frac * length
            xl = a + delta
            xr = b - delta
            if xl != a:
                s += weight * f(xl)
            if xr != b:
                s += weight * f(xr)
        return s

    total = 0.5 * math.pi * f(a + half) + shell_sum(_level_nodes(0))
    estimate = half * total  # h = 1
    h = 1.0
    for level in range(1, _MAX_LEVEL + 1):
        h *= 0.5
        total += shell_sum(_level_nodes(level))
        refined = h * half * total
        err = abs(refined - estimate)
        estimate = refined
        if err <= tol:
            return estimate
    raise ConvergenceError(
        f"quadrature did not reach tol={tol:g} after level {_MAX_LEVEL} "
        f"(last refinement moved {err:.3e})"
    )


def find_root(f: Callable[[float], float], bracket: Interval, tol: float = DEFAULT_TOL) -> float:
    """Return ``x`` in ``bracket`` with ``|f(x)| <= tol``.

    Requires a sign change over the bracket.  Secant steps are taken when
    they fall inside the current bracket, bisection otherwise, so the
    bracket always contains the root.
    """
    if tol <= 0.0:
        raise DomainError("tol must be positive")
    lo, hi = bracket.lo, bracket.hi
    flo, fhi = f(lo), f(hi)
    if abs(flo) <= tol:
        return lo
    if abs(fhi) <= tol:
        return hi
    if flo * fhi > 0.0:
        raise DomainError(f"no sign change on [{lo}, {hi}]: f={flo:g}, {fhi:g}")

    for _ in range(200):
        # secant proposal, clamped into the open bracket
        denom = fhi - flo
        x = hi - fhi * (hi - lo) / denom if denom != 0.0 else 0.5 * (lo + hi)
        margin = 0.125 * (hi - lo)
        if not (lo + 1e-3 * margin < x < hi - 1e-3 * margin):
            x = 0.5 * (lo + hi)
        fx = f(x)
        if abs(fx) <= tol:
            return x
        if flo * fx < 0.0:
            hi, fhi = x, fx
        else:
            lo, flo = x, fx
        if hi - lo <= 4.0 * math.ulp(max(abs(lo), abs(hi), 1.0)):
            # bracket exhausted at machine resolution
            best = lo if abs(flo) <= abs(fhi) else hi
            if abs(f(best)) <= tol:
                return best
            raise ConvergenceError(f"bracket collapsed before |f| <= {tol:g}")
    raise ConvergenceError("root iteration limit exceeded")


def solve_depressed_cubic(g2: float, g3: float) -> tuple[float, float, float]:
    """Real roots of ``4 t^3 - g2 t - g3 = 0``, sorted descending.

    Only the positive-discriminant case ``g2^3 - 27 g3^2 > 0`` (three
    distinct real roots) is supported; it forces ``g2 > 0``, which the
    trigonometric method needs.  The returned triple sums to zero exactly
    up to roundoff, matching the vanishing quadratic coefficient.
    """
    disc = g2 ** 3 - 27.0 * g3 ** 2
    if not disc > 0.0:
        raise DomainError(f"discriminant g2^3 - 27 g3^2 = {disc:g} is not positive")
    amp = math.sqrt(g2 / 3.0)
    arg = 3.0 * math.sqrt(3.0) * g3 / (g2 * math.sqrt(g2))
    arg = max(-1.0, min(1.0, arg))
    theta = math.acos(arg) / 3.0
    roots = [amp * math.cos(theta - 2.0 * math.pi * k / 3.0) for k in range(3)]
    shift = (roots[0] + roots[1] + roots[2]) / 3.0  # re-center to exact zero sum
    roots = sorted((r - shift for r in roots), reverse=True)
    return roots[0], roots[1], roots[2]
