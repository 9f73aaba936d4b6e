"""Elliptic solution of (w')^2 = f(w) from a simple root of the quartic f.

Coefficients use the binomial 1-4-6-4-1 normalization

    f(w) = a0 w^4 + 4 a1 w^3 + 6 a2 w^2 + 4 a3 w + a4,

under which the two invariants take their classical symmetric forms and
survive Taylor shifts unchanged.  Given f(w0) = 0 with f'(w0) != 0, the
initial value problem w(0) = w0 is solved in closed form by

    w(z) = w0 + (1/4) f'(w0) / (p(z; g2, g3) - (1/24) f''(w0)),

where (g2, g3) are the invariants of f.  The cubic case a0 = 0 is fully
supported; the formulas degrade gracefully.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .numerics import DomainError, PoleError, UnsupportedLatticeError
from .weierstrass import Invariants, wp

_ROOT_RTOL = 1e-10


@dataclass(frozen=True)
class QuarticCoefficients:
    """Quartic in binomial normalization; degree at least one."""

    a0: float
    a1: float
    a2: float
    a3: float
    a4: float

    def __post_init__(self) -> None:
        if self.a0 == self.a1 == self.a2 == self.a3 == 0.0:
            raise DomainError("all of a0..a3 vanish: not a polynomial of degree >= 1")

    @classmethod
    def from_monomial(cls, c4: float, c3: float, c2: float, c1: float, c0: float) -> "QuarticCoefficients":
        """Build from plain monomial coefficients c4 w^4 + ... + c0."""
        return cls(c4, c3 / 4.0, c2 / 6.0, c1 / 4.0, c0)

    def value(self, w: float) -> float:
        return ((((self.a0 * w + 4.0 * self.a1) * w + 6.0 * self.a2) * w + 4.0 * self.a3) * w
                + self.a4)

    def derivative(self, w: float) -> float:
        return ((4.0 * self.a0 * w + 12.0 * self.a1) * w + 12.0 * self.a2) * w + 4.0 * self.a3

    def second_derivative(self, w: float) -> float:
        return (12.0 * self.a0 * w + 24.0 * self.a1) * w + 12.0 * self.a2

    def _scale(self, w: float) -> float:
        aw = abs(w)
        return max(
            1.0,
            abs(self.a0) * aw ** 4,
            4.0 * abs(self.a1) * aw ** 3,
            6.0 * abs(self.a2) * aw * aw,
            4.0 * abs(self.a3) * aw,
            abs(self.a4),
        )


@dataclass(frozen=True)
class TaylorShift:
    """Coefficients of f expanded about a root w0.

    f(w) = A0 (w-w0)^4 + 4 A1 (w-w0)^3 + 6 A2 (w-w0)^2 + 4 A3 (w-w0),
    so 12 A2 = f''(w0) and 4 A3 = f'(w0), the latter nonzero for a
    simple root.
    """

    A0: float
    A1: float
    A2: float
    A3: float


def quadrinvariant(q: QuarticCoefficients) -> float:
    """g2 = a0 a4 - 4 a1 a3 + 3 a2^2."""
    return q.a0 * q.a4 - 4.0 * q.a1 * q.a3 + 3.0 * q.a2 * q.a2


def cubinvariant(q: QuarticCoefficients) -> float:
    """g3 = a0 a2 a4 + 2 a1 a2 a3 - a2^3 - a0 a3^2 - a1^2 a4."""
    return (q.a0 * q.a2 * q.a4 + 2.0 * q.a1 * q.a2 * q.a3
            - q.a2 ** 3 - q.a0 * q.a3 ** 2 - q.a1 ** 2 * q.a4)


def recentered(q: QuarticCoefficients, c: float) -> QuarticCoefficients:
    """Coefficients of w -> f(w + c), same normalization.

    Both invariants are unchanged by this shift; that is what makes them
    invariants, and it is independently testable.
    """
    b1 = q.a0 * c + q.a1
    b2 = (q.a0 * c + 2.0 * q.a1) * c + q.a2
    b3 = ((q.a0 * c + 3.0 * q.a1) * c + 3.0 * q.a2) * c + q.a3
    return QuarticCoefficients(q.a0, b1, b2, b3, q.value(c))


def taylor_shift(q: QuarticCoefficients, w0: float) -> TaylorShift:
    """Shift coefficients about a simple root w0 of f.

    A0 = a0, A1 = a0 w0 + a1, A2 = a0 w0^2 + 2 a1 w0 + a2,
    A3 = a0 w0^3 + 3 a1 w0^2 + 3 a2 w0 + a3.
    """
    scale = q._scale(w0)
    if abs(q.value(w0)) > _ROOT_RTOL * scale:
        raise DomainError(f"w0={w0} is not a root: f(w0)={q.value(w0):g}")
    shifted = recentered(q, w0)
    if abs(4.0 * shifted.a3) <= _ROOT_RTOL * scale:
        raise DomainError(f"root not simple: f'(w0)={q.derivative(w0):g}")
    return TaylorShift(shifted.a0, shifted.a1, shifted.a2, shifted.a3)


def solve_quartic_ivp(
    q: QuarticCoefficients, w0: float
) -> tuple[Callable[[complex], complex], Invariants]:
    """Solution of (w')^2 = f(w), w(0) = w0, as a callable, plus invariants.

    The p-function pole at 0 is the removable point where the solution
    takes its initial value.  Invariants with non-positive discriminant
    fall outside the rectangular-lattice machinery and are rejected.
    """
    shift = taylor_shift(q, w0)
    inv = Invariants(quadrinvariant(q), cubinvariant(q))
    if not inv.discriminant > 0.0:
        raise UnsupportedLatticeError(
            f"invariant discriminant {inv.discriminant:g} is not positive"
        )
    offset = 0.5 * shift.A2   # = f''(w0)/24
    residue = shift.A3        # = f'(w0)/4

    def solution(z: complex) -> complex:
        try:
            p = wp(z, inv)
        except PoleError:
            return complex(w0)
        denom = p - offset
        if abs(denom) < 1e-12:
            raise PoleError("argument congruent to a pole of the solution")
        return w0 + residue / denom

    return solution, inv
