"""Elliptic solutions of the degree-four Chebyshev differential equation.

For a parameter lam in (0, 1) the equation is

    (y')^2 = T4(y) - (1 - 2 lam^2) = 8 y^4 - 8 y^2 + 2 lam^2,

whose right-hand side has the four simple real zeros +-mu_plus, +-mu_minus
with mu_{+-} = sqrt((1 +- kappa)/2) and kappa = sqrt(1 - lam^2).  The
solution starting at mu_plus has the Weierstrass form

    y4_plus = mu_plus * (1 + 4 kappa / (P - (4/3 + 2 kappa)))

with P the p-function for G2 = (16/3)(1 + 3 lam^2), G3 = (64/27)(1 - 9 lam^2).
The mu_minus solution is the same formula with kappa negated; the
half-period shift laws relating the four solutions are then checkable
facts rather than definitions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .numerics import DomainError, PoleError
from .weierstrass import Invariants, PeriodPair, half_periods, wp

_POLE_TOL = 1e-12


def chebyshev_t4(t: float) -> float:
    """Degree-four Chebyshev polynomial, T4(cos x) = cos 4x."""
    t2 = t * t
    return 8.0 * t2 * t2 - 8.0 * t2 + 1.0


@dataclass(frozen=True)
class Y4Context:
    """Parameter bundle for one lam: quartic roots, invariants, periods."""

    lam: float
    kappa: float
    mu_plus: float
    mu_minus: float
    invariants: Invariants
    periods: PeriodPair


@lru_cache(maxsize=128)
def make_y4_context(lam: float) -> Y4Context:
    if not (0.0 < lam < 1.0):
        raise DomainError(f"parameter must lie in (0, 1), got {lam}")
    kappa = math.sqrt(1.0 - lam * lam)
    lam2 = lam * lam
    inv = Invariants(16.0 / 3.0 * (1.0 + 3.0 * lam2), 64.0 / 27.0 * (1.0 - 9.0 * lam2))
    return Y4Context(
        lam=lam,
        kappa=kappa,
        mu_plus=math.sqrt(0.5 * (1.0 + kappa)),
        mu_minus=math.sqrt(0.5 * (1.0 - kappa)),
        invariants=inv,
        periods=half_periods(inv),
    )


def _mobius(z: complex, ctx: Y4Context, kappa: float, mu: float) -> complex:
    try:
        big_p = wp(z, ctx.invariants)
    except PoleError:
        return complex(mu)  # removable point: P blows up, bracket tends to 1
    denom = big_p - (4.0 / 3.0 + 2.0 * kappa)
    if abs(denom) < _POLE_TOL:
        raise PoleError("argument congruent to a pole of the solution")
    return mu * (1.0 + 4.0 * kappa / denom)


def y4_plus(z: complex, ctx: Y4Context) -> complex:
    """The solution with value mu_plus at 0; poles congruent to +-half_real/2."""
    return _mobius(z, ctx, ctx.kappa, ctx.mu_plus)


def y4_minus(z: complex, ctx: Y4Context) -> complex:
    """The solution with value mu_minus at 0: y4_plus with kappa negated."""
    return _mobius(z, ctx, -ctx.kappa, ctx.mu_minus)


def y4_zeros_poles(ctx: Y4Context) -> tuple[complex, complex]:
    """Representative zero and pole of y4_plus in the fundamental cell.

    The zero sits at half_real/2 + imaginary half-period, the pole at
    half_real/2; every zero/pole is congruent to plus-or-minus these.
    """
    half = 0.5 * ctx.periods.half_real
    return complex(half, ctx.periods.half_imag_mag), complex(half, 0.0)


def y4_zero_ivp_solution(z: complex, ctx: Y4Context) -> complex:
    """The odd solution of the quartic equation with y(0) = 0.

    Realized as the translate of y4_plus by its zero; the second solution
    of that initial value problem is the negative of this one.
    """
    zero, _ = y4_zeros_poles(ctx)
    return y4_plus(z + zero, ctx)
