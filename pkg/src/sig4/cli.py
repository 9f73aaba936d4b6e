"""Command-line front end.

Subcommands: ``eval`` (single function value), ``periods`` (half-period
table), ``invariants`` (invariant pairs and midpoint values), ``table``
(CSV grid of function values), ``verify`` (identity suite, JSON report).

Exit codes: 0 success, 1 numerical or verification failure, 2 usage
error.  The environment variable SIG4_TOL overrides the default
verification tolerance.
"""

from __future__ import annotations

import json
import math
import os
import re
import sys

import click

from .dd import d_real, dd, make_context, make_modulus, period_ratio, phi
from .numerics import ConvergenceError, DomainError, PoleError
from .weierstrass import Invariants, midpoints, wp
from .y4 import make_y4_context, y4_minus, y4_plus
from .verify import run_suite

_NUM = r"(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?"
_COMPLEX_RE = re.compile(
    rf"^\s*(?P<re>[+-]?\s*{_NUM})\s*(?:(?P<sign>[+-])\s*(?P<im>{_NUM})\s*i)?\s*$"
)
_IMAG_RE = re.compile(rf"^\s*(?P<sign>[+-]?)\s*(?P<im>{_NUM})\s*i\s*$")


def parse_complex(text: str) -> complex:
    """Parse 'a', 'a+bi', 'a-bi' or 'bi', spaces allowed."""
    m = _COMPLEX_RE.match(text)
    if m:
        re_part = float(m.group("re").replace(" ", ""))
        im_part = 0.0
        if m.group("im") is not None:
            im_part = float(m.group("im"))
            if m.group("sign") == "-":
                im_part = -im_part
        return complex(re_part, im_part)
    m = _IMAG_RE.match(text)
    if m:
        im_part = float(m.group("im"))
        if m.group("sign") == "-":
            im_part = -im_part
        return complex(0.0, im_part)
    raise click.BadParameter(f"cannot parse complex literal {text!r}; expected 'a+bi'")


def fmt_real(x: float) -> str:
    return repr(float(x))


def fmt_complex(z: complex) -> str:
    sign = "+" if z.imag >= 0 or math.isnan(z.imag) else "-"
    return f"{fmt_real(z.real)}{sign}{fmt_real(abs(z.imag))}i"


_UNIT_OPEN = click.FloatRange(0.0, 1.0, min_open=True, max_open=True)

_EVAL_FUNCTIONS = ("dd", "y4plus", "y4minus", "wp", "phi", "d")


def _default_tol() -> float:
    raw = os.environ.get("SIG4_TOL")
    if raw is None:
        return 1e-8
    try:
        return float(raw)
    except ValueError:
        raise click.UsageError(f"SIG4_TOL is not a number: {raw!r}")


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise click.UsageError(message)


def _evaluate(function: str, z: complex, kappa, lam, g2, g3):
    """Dispatch one evaluation; returns a float, complex, or the string 'pole'."""
    try:
        if function == "dd":
            _require(kappa is not None, "dd requires --kappa")
            return dd(z, make_context(kappa))
        if function in ("y4plus", "y4minus"):
            param = lam if lam is not None else kappa
            _require(param is not None, f"{function} requires --lambda (or --kappa)")
            ctx = make_y4_context(param)
            return y4_plus(z, ctx) if function == "y4plus" else y4_minus(z, ctx)
        if function == "wp":
            _require(g2 is not None and g3 is not None, "wp requires --g2 and --g3")
            return wp(z, Invariants(g2, g3))
        # phi and d act on the real line
        _require(kappa is not None, f"{function} requires --kappa")
        _require(z.imag == 0.0, f"{function} takes a real argument; got imaginary part")
        mod = make_modulus(kappa)
        return phi(z.real, mod) if function == "phi" else d_real(z.real, mod)
    except PoleError:
        return "pole"


@click.group()
def main() -> None:
    """Signature-four elliptic function toolkit."""


@main.command("eval")
@click.argument("function", type=click.Choice(_EVAL_FUNCTIONS))
@click.option("--z", "z_text", required=True, help="complex argument, 'a+bi'")
@click.option("--kappa", type=_UNIT_OPEN, default=None, help="modulus in (0,1)")
@click.option("--lambda", "lam", type=_UNIT_OPEN, default=None,
              help="quartic parameter in (0,1) for y4plus/y4minus")
@click.option("--g2", type=float, default=None, help="invariant g2 (wp only)")
@click.option("--g3", type=float, default=None, help="invariant g3 (wp only)")
def cmd_eval(function, z_text, kappa, lam, g2, g3):
    """Evaluate FUNCTION at one point and print the value."""
    z = parse_complex(z_text)
    try:
        value = _evaluate(function, z, kappa, lam, g2, g3)
    except (DomainError, ConvergenceError) as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(1)
    if isinstance(value, str):
        click.echo(value)
    elif isinstance(value, complex):
        click.echo(fmt_complex(value))
    else:
        click.echo(fmt_real(value))


@main.command()
@click.option("--kappa", type=_UNIT_OPEN, required=True)
@click.option("--csv", "as_csv", is_flag=True, help="emit one CSV row with header")
def periods(kappa, as_csv):
    """Half-periods of both lattices at a modulus, plus both period ratios."""
    try:
        ctx = make_context(kappa)
        yctx = make_y4_context(ctx.modulus.lam)
        ratio_dd = period_ratio(ctx.modulus)
        ratio_y4 = complex(0.0, yctx.periods.half_imag_mag / yctx.periods.half_real)
    except (DomainError, ConvergenceError) as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(1)
    rows = [
        ("omega", fmt_real(ctx.periods.half_real)),
        ("omega_prime_mag", fmt_real(ctx.periods.half_imag_mag)),
        ("Omega", fmt_real(yctx.periods.half_real)),
        ("Omega_prime_mag", fmt_real(yctx.periods.half_imag_mag)),
        ("ratio_dd", fmt_complex(ratio_dd)),
        ("ratio_y4", fmt_complex(ratio_y4)),
    ]
    if as_csv:
        click.echo(",".join(name for name, _ in rows))
        click.echo(",".join(value for _, value in rows))
    else:
        for name, value in rows:
            click.echo(f"{name} = {value}")


@main.command()
@click.option("--kappa", type=_UNIT_OPEN, required=True)
def invariants(kappa):
    """Invariants and midpoint values of both lattices at a modulus."""
    try:
        ctx = make_context(kappa)
        yctx = make_y4_context(ctx.modulus.lam)
        mid = midpoints(ctx.invariants)
        ymid = midpoints(yctx.invariants)
    except (DomainError, ConvergenceError) as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(1)
    click.echo(f"g2 = {fmt_real(ctx.invariants.g2)}")
    click.echo(f"g3 = {fmt_real(ctx.invariants.g3)}")
    click.echo(f"discriminant = {fmt_real(ctx.invariants.discriminant)}")
    click.echo(f"midpoints = {fmt_real(mid.e1)}, {fmt_real(mid.e2)}, {fmt_real(mid.e3)}")
    click.echo(f"G2 = {fmt_real(yctx.invariants.g2)}")
    click.echo(f"G3 = {fmt_real(yctx.invariants.g3)}")
    click.echo(f"Discriminant = {fmt_real(yctx.invariants.discriminant)}")
    click.echo(f"Midpoints = {fmt_real(ymid.e1)}, {fmt_real(ymid.e2)}, {fmt_real(ymid.e3)}")


@main.command()
@click.argument("function", type=click.Choice(_EVAL_FUNCTIONS))
@click.option("--kappa", type=_UNIT_OPEN, default=None)
@click.option("--lambda", "lam", type=_UNIT_OPEN, default=None)
@click.option("--g2", type=float, default=None)
@click.option("--g3", type=float, default=None)
@click.option("--from", "start", type=float, required=True, help="grid start (real part)")
@click.option("--to", "stop", type=float, required=True, help="grid end (real part)")
@click.option("--steps", type=click.IntRange(min=1), required=True,
              help="number of grid intervals; steps+1 rows")
@click.option("--imag", type=float, default=0.0, help="fixed imaginary part of z")
def table(function, kappa, lam, g2, g3, start, stop, steps, imag):
    """CSV table of FUNCTION over a grid: re(z), im(z), re(f), im(f)."""
    import csv as _csv

    writer = _csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(["re(z)", "im(z)", "re(f)", "im(f)"])
    for k in range(steps + 1):
        x = start + (stop - start) * k / steps
        z = complex(x, imag)
        try:
            value = _evaluate(function, z, kappa, lam, g2, g3)
        except (DomainError, ConvergenceError) as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(1)
        if isinstance(value, str):
            writer.writerow([fmt_real(x), fmt_real(imag), "pole", "pole"])
        else:
            value = complex(value)
            writer.writerow(
                [fmt_real(x), fmt_real(imag), fmt_real(value.real), fmt_real(value.imag)]
            )


@main.command()
@click.option("--kappa", type=_UNIT_OPEN, required=True)
@click.option("--n", type=click.IntRange(min=1), default=200, help="samples per identity")
@click.option("--seed", type=int, default=0, help="PRNG seed (default 0)")
@click.option("--tol", type=float, default=None,
              help="pass tolerance (default SIG4_TOL or 1e-8)")
@click.option("--out", type=click.Path(dir_okay=False, writable=True), default=None,
              help="write the JSON report to a file instead of stdout")
def verify(kappa, n, seed, tol, out):
    """Run the identity suite; exit 0 only if every check passes."""
    if tol is None:
        tol = _default_tol()
    if tol <= 0.0:
        raise click.UsageError("tolerance must be positive")
    try:
        report = run_suite(kappa, n, seed, tol)
    except (DomainError, ConvergenceError, RuntimeError) as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(1)
    payload = json.dumps(report.to_json_dict(), indent=2)
    if out is not None:
        with open(out, "w", encoding="utf-8") as handle:
            handle.write(payload + "\n")
    else:
        click.echo(payload)
    sys.exit(0 if report.all_passed else 1)


if __name__ == "__main__":
    main()
