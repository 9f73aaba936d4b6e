"""Batch numerical verification of the package's defining identities.

Every structural fact the library relies on is expressed as a residual
that should vanish: differential equations, half-period shift laws,
zero/pole locations, the quarter-turn relation between the two
Weierstrass functions, the Moebius bridge between dd and y4_plus, period
transfers, and the quartic initial-value solver reproducing both function
families.  ``run_suite`` samples the relevant fundamental cells, records
the worst residual per identity, and assembles a deterministic report.

Sampling uses a self-contained 64-bit linear congruential generator
(state' = state * 6364136223846793005 + 1442695040888963407 mod 2^64,
uniform doubles from the top 53 bits) so that a (kappa, n, seed, tol)
quadruple reproduces bit-identical residuals anywhere.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass

from .dd import DDContext, dd, make_context, phi_many
from .numerics import DomainError, PoleError
from .quartic import QuarticCoefficients, cubinvariant, quadrinvariant, solve_quartic_ivp
from .weierstrass import PeriodPair, wp
from .y4 import Y4Context, make_y4_context, y4_minus, y4_plus, y4_zeros_poles

_MARGIN_FRAC = 0.05   # pole-avoidance margin, fraction of the shortest half-period
# Step for the fourth-order stencil on the complex ODE residuals.  A plain
# second-order difference bottoms out near 1.5e-8 close to the sampling
# margin (h^2 truncation grows like |y|^6, evaluation jitter like |y|^3/h);
# the five-point stencil at 1e-4 keeps both terms under 1e-9.
_FD_STEP = 1e-4
_FD_STEP_REAL = 1e-5  # step for the real-axis equation of d


class Lcg64:
    """Deterministic 64-bit linear congruential generator."""

    _MULT = 6364136223846793005
    _INC = 1442695040888963407
    _MASK = (1 << 64) - 1

    def __init__(self, seed: int):
        self._state = seed & self._MASK

    def next_u64(self) -> int:
        self._state = (self._state * self._MULT + self._INC) & self._MASK
        return self._state

    def uniform(self, lo: float, hi: float) -> float:
        return lo + (hi - lo) * (self.next_u64() >> 11) * (1.0 / (1 << 53))


@dataclass
class IdentityCheck:
    """Outcome of one identity: worst residual over its samples."""

    name: str
    samples: int
    max_residual: float
    tolerance: float
    passed: bool


@dataclass
class VerificationReport:
    kappa: float
    seed: int
    tol: float
    checks: list[IdentityCheck]
    wall_time_ms: float

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json_dict(self) -> dict:
        return {
            "kappa": self.kappa,
            "seed": self.seed,
            "tol": self.tol,
            "checks": [
                {
                    "name": c.name,
                    "samples": c.samples,
                    "max_residual": c.max_residual,
                    "passed": c.passed,
                }
                for c in self.checks
            ],
            "wall_time_ms": self.wall_time_ms,
        }


def _draw(rng: Lcg64, pp: PeriodPair, avoid: tuple[complex, ...] = ()) -> complex:
    """Uniform point of the centered fundamental cell, away from listed points."""
    hr, hi = pp.half_real, pp.half_imag_mag
    margin = _MARGIN_FRAC * min(hr, hi)
    while True:
        z = complex(rng.uniform(-hr, hr), rng.uniform(-hi, hi))
        if abs(z) < margin:
            continue
        if any(abs(z - a) < margin for a in avoid):
            continue
        return z


# ----------------------------------------------------------------------
# single-point residuals for the cross-function relations


def check_pP(z: complex, kappa: float) -> float:
    """|P(z) + 4 p(2iz)|: the quarter-turn relation between the lattices."""
    ctx = make_context(kappa)
    yctx = make_y4_context(ctx.modulus.lam)
    return abs(wp(z, yctx.invariants) + 4.0 * wp(2j * z, ctx.invariants))


def check_ddy4(z: complex, kappa: float) -> float:
    """Residual of dd(2iz) = 1 + kappa (y4p(z) - mu)/(y4p(z) + mu)."""
    ctx = make_context(kappa)
    yctx = make_y4_context(ctx.modulus.lam)
    y = y4_plus(z, yctx)
    mu = yctx.mu_plus
    if abs(y + mu) < 1e-8:
        raise PoleError("denominator y4 + mu_plus vanishes")
    return abs(dd(2j * z, ctx) - (1.0 + kappa * (y - mu) / (y + mu)))


def check_ooOO(kappa: float) -> tuple[float, float]:
    """Period transfer residuals: |omega - 2|Omega'|| and ||omega'| - 2 Omega|."""
    ctx = make_context(kappa)
    yctx = make_y4_context(ctx.modulus.lam)
    res1 = abs(ctx.periods.half_real - 2.0 * yctx.periods.half_imag_mag)
    res2 = abs(ctx.periods.half_imag_mag - 2.0 * yctx.periods.half_real)
    return res1, res2


def check_final_remark(z: complex, kappa: float) -> float:
    """Residual of dd(z) = 1 - 2 y4p(z/sqrt8 + zero point)^2.

    Here y4_plus is built with kappa itself as the quartic parameter, so
    its initial value is sqrt((1 + lam)/2) and its zero shift absorbs the
    initial condition dd(0) = 1.
    """
    ctx = make_context(kappa)
    yctx = make_y4_context(kappa)
    zero, _ = y4_zeros_poles(yctx)
    w = y4_plus(z / math.sqrt(8.0) + zero, yctx)
    return abs(dd(z, ctx) - (1.0 - 2.0 * w * w))


# ----------------------------------------------------------------------
# per-identity suite runners: (ctx, yctx, n, rng) -> (samples, max residual)


def _sampled_max(n, rng, pp, avoid, residual_at):
    worst = 0.0
    for _ in range(n):
        for _attempt in range(128):
            z = _draw(rng, pp, avoid)
            try:
                r = residual_at(z)
            except PoleError:
                continue
            break
        else:
            raise RuntimeError("sampling kept hitting poles; cell misconfigured?")
        worst = max(worst, r)
    return n, worst


def _run_d_ode(ctx: DDContext, yctx: Y4Context, n: int, rng: Lcg64):
    """(d')^2 = 2 (1-d)(d^2 - lam^2) on the real axis, d' by central difference."""
    mod = ctx.modulus
    omega = ctx.periods.half_real
    h = _FD_STEP_REAL
    us = []
    while len(us) < n:
        u = rng.uniform(-2.0 * omega, 2.0 * omega)
        # keep the difference stencil inside one quasi-period branch
        if abs(u - 2.0 * omega * round(u / (2.0 * omega))) < 1e-3:
            continue
        us.append(u)
    targets = []
    for u in us:
        targets.extend((u - h, u, u + h))
    phis = phi_many(targets, mod, tol=1e-13)
    k2 = mod.kappa ** 2
    lam2 = mod.lam ** 2

    def d_of(p: float) -> float:
        return math.sqrt(1.0 - k2 * math.sin(p) ** 2)

    worst = 0.0
    for i in range(0, len(targets), 3):
        dm, d0, dp = d_of(phis[i]), d_of(phis[i + 1]), d_of(phis[i + 2])
        deriv = (dp - dm) / (2.0 * h)
        worst = max(worst, abs(deriv * deriv - 2.0 * (1.0 - d0) * (d0 * d0 - lam2)))
    return n, worst


def _run_dd_wp_product(ctx: DDContext, yctx: Y4Context, n: int, rng: Lcg64):
    """(1 - dd)(1/3 + p) = kappa^2 / 2 over the cell."""
    half_k2 = 0.5 * ctx.modulus.kappa ** 2
    pp = ctx.periods
    poles = (complex(0.0, pp.half_imag_mag), complex(0.0, -pp.half_imag_mag))

    def residual(z: complex) -> float:
        return abs((1.0 - dd(z, ctx)) * (1.0 / 3.0 + wp(z, ctx.invariants)) - half_k2)

    return _sampled_max(n, rng, pp, poles, residual)


def _run_omega_trig_vs_forward(ctx: DDContext, yctx: Y4Context, n: int, rng: Lcg64):
    from .dd import omega_three_ways

    _, via_integral, via_trig = omega_three_ways(ctx.modulus, tol=1e-13)
    return 1, abs(via_trig - via_integral)


def _run_omega_trig_vs_series(ctx: DDContext, yctx: Y4Context, n: int, rng: Lcg64):
    from .dd import omega_three_ways

    closed, _, via_trig = omega_three_ways(ctx.modulus, tol=1e-13)
    return 1, abs(via_trig - closed)


def _run_omega_prime_routes(ctx: DDContext, yctx: Y4Context, n: int, rng: Lcg64):
    from .dd import omega_prime
    from .hypergeometric import complete_f

    quad = omega_prime(ctx.modulus, tol=1e-13)
    series = math.pi / math.sqrt(2.0) * complete_f(ctx.modulus.lam ** 2)
    agm = ctx.periods.half_imag_mag
    return 1, max(abs(quad - series), abs(quad - agm))


def _y4_quartic_rhs(y: complex, lam2: float) -> complex:
    y2 = y * y
    return 8.0 * y2 * y2 - 8.0 * y2 + 2.0 * lam2


def _stencil_derivative(f, z: complex, h: float) -> complex:
    """Fourth-order five-point derivative of ``f`` at ``z``."""
    return (8.0 * (f(z + h) - f(z - h)) - (f(z + 2 * h) - f(z - 2 * h))) / (12.0 * h)


def _run_y4_ode(ctx: DDContext, yctx: Y4Context, n: int, rng: Lcg64):
    """(y')^2 = 8y^4 - 8y^2 + 2 lam^2 for y4_plus, derivative by differencing."""
    pp = yctx.periods
    half = 0.5 * pp.half_real
    poles = (complex(half, 0.0), complex(-half, 0.0))
    lam2 = yctx.lam ** 2

    def residual(z: complex) -> float:
        y0 = y4_plus(z, yctx)
        deriv = _stencil_derivative(lambda w: y4_plus(w, yctx), z, _FD_STEP)
        return abs(deriv * deriv - _y4_quartic_rhs(y0, lam2)) / (1.0 + abs(y0) ** 4)

    return _sampled_max(n, rng, pp, poles, residual)


def _run_y4_shifts(ctx: DDContext, yctx: Y4Context, n: int, rng: Lcg64):
    """Half-period shifts: +Omega negates, +Omega' swaps to the mu_minus branch."""
    pp = yctx.periods
    hr, hi = pp.half_real, pp.half_imag_mag
    half = 0.5 * hr
    avoid = tuple(
        complex(sr * half, si * hi)
        for sr in (-1.0, 1.0)
        for si in (-1.0, 0.0, 1.0)
    )

    def residual(z: complex) -> float:
        base_p = y4_plus(z, yctx)
        base_m = y4_minus(z, yctx)
        r1 = abs(y4_plus(z + hr, yctx) + base_p)
        r2 = abs(y4_plus(z + complex(0.0, hi), yctx) - base_m)
        r3 = abs(y4_plus(z + complex(hr, hi), yctx) + base_m)
        return max(r1, r2, r3)

    return _sampled_max(n, rng, pp, avoid, residual)


def _run_y4_zero_pole(ctx: DDContext, yctx: Y4Context, n: int, rng: Lcg64):
    """Zero at half_real/2 + imaginary half-period; pole value of P at half_real/2."""
    zero, pole = y4_zeros_poles(yctx)
    r_zero = abs(y4_plus(zero, yctx))
    pole_value = 4.0 / 3.0 + 2.0 * yctx.kappa
    r_pole = abs(wp(pole, yctx.invariants) - pole_value)
    return 2, max(r_zero, r_pole)


def _run_y4_zero_start(ctx: DDContext, yctx: Y4Context, n: int, rng: Lcg64):
    """The zero-shifted translate solves the quartic equation with y(0) = 0."""
    from .y4 import y4_zero_ivp_solution

    zero, _ = y4_zeros_poles(yctx)
    pp = yctx.periods
    half = 0.5 * pp.half_real
    # pole set of the translate, expressed in the shifted coordinate
    avoid = (
        complex(0.0, -pp.half_imag_mag),
        complex(-pp.half_real, -pp.half_imag_mag),
        complex(0.0, pp.half_imag_mag),
        complex(-pp.half_real, pp.half_imag_mag),
    )
    lam2 = yctx.lam ** 2

    def residual(z: complex) -> float:
        y0 = y4_zero_ivp_solution(z, yctx)
        deriv = _stencil_derivative(lambda w: y4_zero_ivp_solution(w, yctx), z, _FD_STEP)
        return abs(deriv * deriv - _y4_quartic_rhs(y0, lam2)) / (1.0 + abs(y0) ** 4)

    samples, worst = _sampled_max(n, rng, pp, avoid, residual)
    worst = max(worst, abs(y4_zero_ivp_solution(0.0, yctx)))
    return samples + 1, worst


def _run_wp_quarter_turn(ctx: DDContext, yctx: Y4Context, n: int, rng: Lcg64):
    """P(z) = -4 p(2iz), plus the exact invariant scaling (2i)^4, (2i)^6."""
    kappa = ctx.modulus.kappa
    inv, yinv = ctx.invariants, yctx.invariants
    scale_res = max(abs(16.0 * inv.g2 - yinv.g2), abs(-64.0 * inv.g3 - yinv.g3))

    def residual(z: complex) -> float:
        return check_pP(z, kappa)

    samples, worst = _sampled_max(n, rng, yctx.periods, (), residual)
    return samples, max(worst, scale_res)


def _run_dd_y4_bridge(ctx: DDContext, yctx: Y4Context, n: int, rng: Lcg64):
    """dd(2iz) = 1 + kappa (y4p - mu)/(y4p + mu) away from the branch pole."""
    kappa = ctx.modulus.kappa
    pp = yctx.periods
    half = 0.5 * pp.half_real
    avoid = (
        complex(half, 0.0),
        complex(-half, 0.0),
        complex(pp.half_real, 0.0),
        complex(-pp.half_real, 0.0),
    )

    def residual(z: complex) -> float:
        return check_ddy4(z, kappa)

    return _sampled_max(n, rng, pp, avoid, residual)


def _run_period_transfer(ctx: DDContext, yctx: Y4Context, n: int, rng: Lcg64):
    res1, res2 = check_ooOO(ctx.modulus.kappa)
    return 2, max(res1, res2)


def dd_equation_quartic(lam: float) -> QuarticCoefficients:
    """2 (1 - w)(w^2 - lam^2) in binomial normalization (cubic: a0 = 0)."""
    lam2 = lam * lam
    return QuarticCoefficients(0.0, -0.5, 1.0 / 3.0, 0.5 * lam2, -2.0 * lam2)


def y4_equation_quartic(lam: float) -> QuarticCoefficients:
    """8 w^4 - 8 w^2 + 2 lam^2 in binomial normalization."""
    return QuarticCoefficients(8.0, 0.0, -4.0 / 3.0, 0.0, 2.0 * lam * lam)


def _run_quartic_ivp_dd(ctx: DDContext, yctx: Y4Context, n: int, rng: Lcg64):
    """General quartic solver applied to the dd equation reproduces dd."""
    lam = ctx.modulus.lam
    q = dd_equation_quartic(lam)
    solution, inv = solve_quartic_ivp(q, 1.0)
    inv_res = max(abs(inv.g2 - ctx.invariants.g2), abs(inv.g3 - ctx.invariants.g3))
    pp = ctx.periods
    poles = (complex(0.0, pp.half_imag_mag), complex(0.0, -pp.half_imag_mag))

    def residual(z: complex) -> float:
        return abs(solution(z) - dd(z, ctx))

    count = min(n, 50)
    samples, worst = _sampled_max(count, rng, pp, poles, residual)
    return samples, max(worst, inv_res)


def _run_quartic_ivp_y4(ctx: DDContext, yctx: Y4Context, n: int, rng: Lcg64):
    """General quartic solver applied to the Chebyshev equation reproduces y4_plus."""
    q = y4_equation_quartic(yctx.lam)
    solution, inv = solve_quartic_ivp(q, yctx.mu_plus)
    inv_res = max(abs(inv.g2 - yctx.invariants.g2), abs(inv.g3 - yctx.invariants.g3))
    pp = yctx.periods
    half = 0.5 * pp.half_real
    poles = (complex(half, 0.0), complex(-half, 0.0))

    def residual(z: complex) -> float:
        return abs(solution(z) - y4_plus(z, yctx))

    count = min(n, 50)
    samples, worst = _sampled_max(count, rng, pp, poles, residual)
    return samples, max(worst, inv_res)


#: fixed identity registry: (name, runner), executed and reported in this order
REGISTRY = (
    ("d-ode-real-axis", _run_d_ode),
    ("dd-wp-product", _run_dd_wp_product),
    ("omega-trig-vs-forward", _run_omega_trig_vs_forward),
    ("omega-trig-vs-series", _run_omega_trig_vs_series),
    ("omega-prime-two-routes", _run_omega_prime_routes),
    ("y4-ode", _run_y4_ode),
    ("y4-shifts", _run_y4_shifts),
    ("y4-zero-pole", _run_y4_zero_pole),
    ("y4-zero-start", _run_y4_zero_start),
    ("wp-quarter-turn", _run_wp_quarter_turn),
    ("dd-y4-bridge", _run_dd_y4_bridge),
    ("period-transfer", _run_period_transfer),
    ("quartic-ivp-dd", _run_quartic_ivp_dd),
    ("quartic-ivp-y4", _run_quartic_ivp_y4),
)

REGISTRY_NAMES = tuple(name for name, _ in REGISTRY)


def run_suite(kappa: float, n_samples: int, seed: int, tol: float) -> VerificationReport:
    """Evaluate every registered identity and report worst residuals.

    Deterministic: one LCG stream seeded with ``seed`` is consumed by the
    checks in registry order, so identical inputs give bit-identical
    residuals.
    """
    if n_samples < 1:
        raise DomainError("n_samples must be at least 1")
    if not tol > 0.0:
        raise DomainError("tol must be positive")
    start = time.perf_counter()
    try:
        ctx = make_context(kappa)
    except Exception as exc:
        raise RuntimeError(f"context construction failed at stage 'dd': {exc}") from exc
    try:
        yctx = make_y4_context(ctx.modulus.lam)
    except Exception as exc:
        raise RuntimeError(f"context construction failed at stage 'y4': {exc}") from exc

    rng = Lcg64(seed)
    checks = []
    for name, runner in REGISTRY:
        samples, worst = runner(ctx, yctx, n_samples, rng)
        checks.append(IdentityCheck(name, samples, worst, tol, worst <= tol))
    elapsed_ms = (time.perf_counter() - start) * 1e3
    return VerificationReport(kappa, seed, tol, checks, elapsed_ms)
