"""Chebyshev-quartic solutions y4_plus / y4_minus."""

import math
import random

import pytest

from sig4.numerics import DomainError, PoleError
from sig4.weierstrass import wp
from sig4.y4 import (
    chebyshev_t4,
    make_y4_context,
    y4_minus,
    y4_plus,
    y4_zero_ivp_solution,
    y4_zeros_poles,
)

MU_PLUS = 0.8944271909999159   # sqrt(0.8)
MU_MINUS = 0.4472135954999579  # sqrt(0.2)
OMEGA_BIG = 1.3327026719111978     # |omega'|/2 at kappa = 0.6
OMEGA_BIG_PRIME = 0.8524376569864587  # omega/2


@pytest.fixture(scope="module")
def ctx():
    return make_y4_context(0.8)


def test_chebyshev_t4():
    assert chebyshev_t4(1.0) == 1.0
    assert chebyshev_t4(0.0) == 1.0
    assert abs(chebyshev_t4(math.cos(math.pi / 8.0))) <= 1e-15
    for theta in (0.3, 1.1, 2.0):
        assert chebyshev_t4(math.cos(theta)) == pytest.approx(math.cos(4 * theta), abs=1e-14)


def test_context_fields(ctx):
    assert ctx.kappa == pytest.approx(0.6, abs=1e-15)
    assert ctx.mu_plus == pytest.approx(MU_PLUS, abs=1e-15)
    assert ctx.mu_minus == pytest.approx(MU_MINUS, abs=1e-15)
    assert ctx.invariants.g2 == pytest.approx(15.573333333333332, abs=1e-12)
    assert ctx.invariants.g3 == pytest.approx(-11.282962962962962, abs=1e-12)
    assert ctx.periods.half_real == pytest.approx(OMEGA_BIG, abs=1e-12)
    assert ctx.periods.half_imag_mag == pytest.approx(OMEGA_BIG_PRIME, abs=1e-12)


def test_context_root_identities(ctx):
    assert ctx.mu_plus ** 2 + ctx.mu_minus ** 2 == pytest.approx(1.0, abs=1e-15)
    assert 4.0 * ctx.mu_plus ** 2 * ctx.mu_minus ** 2 == pytest.approx(
        ctx.lam ** 2, abs=1e-14
    )
    # all four zeros of 8y^4 - 8y^2 + 2 lam^2
    for root in (ctx.mu_plus, -ctx.mu_plus, ctx.mu_minus, -ctx.mu_minus):
        assert abs(chebyshev_t4(root) - (1.0 - 2.0 * ctx.lam ** 2)) <= 1e-13


@pytest.mark.parametrize("bad", [0.0, 1.0, -0.5, 2.0])
def test_parameter_domain(bad):
    with pytest.raises(DomainError):
        make_y4_context(bad)


class TestY4Values:
    def test_initial_value_exact(self, ctx):
        assert y4_plus(0.0, ctx) == complex(ctx.mu_plus)
        assert y4_minus(0.0, ctx) == complex(ctx.mu_minus)

    def test_half_period_values(self, ctx):
        hr, hi = ctx.periods.half_real, ctx.periods.half_imag_mag
        assert y4_plus(hr, ctx).real == pytest.approx(-MU_PLUS, abs=1e-9)
        assert y4_plus(complex(0.0, hi), ctx).real == pytest.approx(MU_MINUS, abs=1e-9)
        assert y4_plus(complex(hr, hi), ctx).real == pytest.approx(-MU_MINUS, abs=1e-9)

    def test_midpoint_values_of_p(self, ctx):
        hr, hi = ctx.periods.half_real, ctx.periods.half_imag_mag
        lam = ctx.lam
        assert wp(hr, ctx.invariants).real == pytest.approx(4.0 / 3.0, abs=1e-9)
        assert wp(complex(hr, hi), ctx.invariants).real == pytest.approx(
            -2.0 / 3.0 + 2.0 * lam, abs=1e-9
        )
        assert wp(complex(0.0, hi), ctx.invariants).real == pytest.approx(
            -2.0 / 3.0 - 2.0 * lam, abs=1e-9
        )

    def test_pole_raises(self, ctx):
        with pytest.raises(PoleError):
            y4_plus(0.5 * ctx.periods.half_real, ctx)


class TestShiftLaws:
    def test_real_shift_negates(self, ctx):
        rng = random.Random(21)
        hr = ctx.periods.half_real
        for _ in range(30):
            z = complex(rng.uniform(-1.0, 1.0), rng.uniform(-0.7, 0.7))
            if abs(z.real) > 0.9 * hr:
                continue
            try:
                lhs = y4_plus(z + hr, ctx)
                rhs = -y4_plus(z, ctx)
            except PoleError:
                continue
            assert abs(lhs - rhs) <= 1e-9 * (1.0 + abs(rhs))

    def test_imaginary_shift_swaps_branch(self, ctx):
        rng = random.Random(22)
        hi = ctx.periods.half_imag_mag
        for _ in range(30):
            z = complex(rng.uniform(-1.0, 1.0), rng.uniform(-0.7, 0.7))
            try:
                lhs = y4_plus(z + complex(0.0, hi), ctx)
                rhs = y4_minus(z, ctx)
            except PoleError:
                continue
            assert abs(lhs - rhs) <= 1e-9 * (1.0 + abs(rhs))

    def test_both_shifts_negate_minus_branch(self, ctx):
        rng = random.Random(24)
        hr, hi = ctx.periods.half_real, ctx.periods.half_imag_mag
        for _ in range(30):
            z = complex(rng.uniform(-1.0, 1.0), rng.uniform(-0.7, 0.7))
            try:
                lhs = y4_plus(z + complex(hr, hi), ctx)
                rhs = -y4_minus(z, ctx)
            except PoleError:
                continue
            assert abs(lhs - rhs) <= 1e-9 * (1.0 + abs(rhs))

    def test_minus_at_omega(self, ctx):
        assert y4_minus(ctx.periods.half_real, ctx).real == pytest.approx(
            -MU_MINUS, abs=1e-9
        )


class TestZerosPoles:
    def test_locations(self, ctx):
        zero, pole = y4_zeros_poles(ctx)
        assert zero == pytest.approx(
            complex(OMEGA_BIG / 2.0, OMEGA_BIG_PRIME), abs=1e-12
        )
        assert pole == pytest.approx(complex(OMEGA_BIG / 2.0, 0.0), abs=1e-12)

    def test_zero_value(self, ctx):
        zero, _ = y4_zeros_poles(ctx)
        assert abs(y4_plus(zero, ctx)) <= 1e-9

    def test_pole_denominator_value(self, ctx):
        # P at the pole point takes exactly the bracket-busting value 4/3 + 2 kappa
        _, pole = y4_zeros_poles(ctx)
        assert wp(pole, ctx.invariants).real == pytest.approx(
            4.0 / 3.0 + 2.0 * ctx.kappa, abs=1e-10
        )

    def test_zero_is_simple(self, ctx):
        # local linear growth: value scales linearly with the offset
        zero, _ = y4_zeros_poles(ctx)
        eps = 1e-4
        v1 = abs(y4_plus(zero + eps, ctx))
        v2 = abs(y4_plus(zero + 2 * eps, ctx))
        assert v2 / v1 == pytest.approx(2.0, rel=0.05)

    def test_negated_zero_congruent(self, ctx):
        zero, _ = y4_zeros_poles(ctx)
        assert abs(y4_plus(-zero, ctx)) <= 1e-9


class TestZeroStartSolution:
    def test_initial_condition(self, ctx):
        assert abs(y4_zero_ivp_solution(0.0, ctx)) <= 1e-9

    def test_ode_residual(self, ctx):
        h = 1e-6
        lam2 = ctx.lam ** 2
        for z in (0.3, 0.1 + 0.2j, -0.4 + 0.1j):
            y0 = y4_zero_ivp_solution(z, ctx)
            deriv = (
                y4_zero_ivp_solution(z + h, ctx) - y4_zero_ivp_solution(z - h, ctx)
            ) / (2 * h)
            y2 = y0 * y0
            assert abs(deriv * deriv - (8 * y2 * y2 - 8 * y2 + 2 * lam2)) <= 1e-7

    def test_negative_solution_via_omega_shift(self, ctx):
        hr = ctx.periods.half_real
        for z in (0.2, 0.3 + 0.1j):
            lhs = y4_zero_ivp_solution(z + hr, ctx)
            rhs = -y4_zero_ivp_solution(z, ctx)
            assert abs(lhs - rhs) <= 1e-9


def test_double_values_have_zero_derivative(ctx):
    # derivative vanishes where y4_plus takes the quartic-root values
    h = 1e-6
    hr, hi = ctx.periods.half_real, ctx.periods.half_imag_mag
    for point in (0.0, hr, complex(0.0, hi), complex(hr, hi)):
        deriv = (y4_plus(point + h, ctx) - y4_plus(point - h, ctx)) / (2 * h)
        assert abs(deriv) <= 1e-8


def test_ode_residual_cell_sweep(ctx):
    rng = random.Random(33)
    hr, hi = ctx.periods.half_real, ctx.periods.half_imag_mag
    h = 1e-6
    lam2 = ctx.lam ** 2
    margin = 0.05 * min(hr, hi)
    count = 0
    while count < 200:
        z = complex(rng.uniform(-hr, hr), rng.uniform(-hi, hi))
        if abs(z) < margin or abs(z - hr / 2) < margin or abs(z + hr / 2) < margin:
            continue
        count += 1
        y0 = y4_plus(z, ctx)
        deriv = (y4_plus(z + h, ctx) - y4_plus(z - h, ctx)) / (2 * h)
        y2 = y0 * y0
        residual = abs(deriv * deriv - (8 * y2 * y2 - 8 * y2 + 2 * lam2))
        assert residual <= 1e-7 * (1.0 + abs(y0) ** 4)
