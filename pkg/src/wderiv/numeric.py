"""Floating-point layer: W on [0, inf), its derivatives, and sign scans.

The exact triangle is the single source of truth for coefficients; this
module converts entries to binary64 on demand and never caches float rows.
Three derivative routes are provided so they can check each other:

* ``w_derivative``      -- the closed form exp(-nW) p_n(W) / (1+W)^(2n-1),
* ``w_derivative_taylor`` -- the series sum_{m>=n} (-m)^(m-1) x^(m-n)/(m-n)!,
  valid for |x| < 1/e,
* ``w_derivative_fd``   -- a central finite difference with one Richardson
  extrapolation step, usable as an independent oracle for n <= 5.

``bernstein_scan`` checks the alternating-sign law (-1)^(n-1) d^nW/dx^n > 0
on a grid, the numeric witness that W' is completely monotonic and W is a
Bernstein function.
"""
from __future__ import annotations

import math
import sys
from dataclasses import dataclass
from fractions import Fraction
from math import comb, exp, factorial, fsum, log1p

from .triangle import CoefficientTable

__all__ = [
    "MACHINE_EPS",
    "ROUTE_CLOSED",
    "ROUTE_TAYLOR",
    "ROUTE_FD",
    "ConvergenceError",
    "WEvaluation",
    "DerivativeValue",
    "BernsteinScanReport",
    "lambert_w",
    "w_derivative",
    "w_derivative_taylor",
    "w_derivative_fd",
    "pn_series_eval",
    "bernstein_scan",
    "log_grid",
]

MACHINE_EPS = sys.float_info.epsilon

ROUTE_CLOSED = "closed_form"
ROUTE_TAYLOR = "taylor"
ROUTE_FD = "finite_difference"

_MAX_HALLEY_ITERATIONS = 50
_MAX_SERIES_TERMS = 10_000
_SERIES_W_BOUND = 0.2  # |w| guard for the p_n series; term ratio ~ e|w|e^w < 1 here


class ConvergenceError(ArithmeticError):
    """An iteration or series hit its cap without meeting its tolerance."""


@dataclass(frozen=True)
class WEvaluation:
    """W(x) on the principal branch plus its round-trip defect w*e^w - x."""

    x: float
    w: float
    residual: float
    iterations: int


@dataclass(frozen=True)
class DerivativeValue:
    """d^nW/dx^n at x, tagged with the route that produced it."""

    n: int
    x: float
    value: float
    route: str


@dataclass(frozen=True)
class BernsteinScanReport:
    """Result of the alternating-sign scan; violations hold (n, x, value)."""

    n_max: int
    grid: tuple[float, ...]
    violations: tuple[tuple[int, float, float], ...]

    @property
    def holds(self) -> bool:
        return not self.violations


def lambert_w(x: float) -> WEvaluation:
    """Principal-branch W(x) for finite x >= 0 by Halley's method.

    Start from w0 = ln(1+x); stop when the Halley step drops below
    2*eps*(1+|w|) (or immediately on an exact root).  The converged value
    is then nudged to whichever of its ulp neighbours minimises the
    measured defect |w*e^w - x|, so the reported residual is as small as
    binary64 permits.
    """
    if not math.isfinite(x) or x < 0.0:
        raise ValueError(f"lambert_w needs finite x >= 0, got {x}")
    w = log1p(x)
    iterations = 0
    for _ in range(_MAX_HALLEY_ITERATIONS):
        ew = exp(w)
        f = w * ew - x
        if f == 0.0:
            break
        wp1 = w + 1.0
        dw = f / (ew * wp1 - (w + 2.0) * f / (2.0 * wp1))
        w -= dw
        iterations += 1
        if abs(dw) <= 2.0 * MACHINE_EPS * (1.0 + abs(w)):
            break
    else:
        raise ConvergenceError(f"lambert_w({x}) did not converge in "
                               f"{_MAX_HALLEY_ITERATIONS} iterations")
    best, best_resid = w, abs(w * exp(w) - x)
    for cand in (math.nextafter(w, math.inf), math.nextafter(w, -math.inf)):
        resid = abs(cand * exp(cand) - x)
        if resid < best_resid:
            best, best_resid = cand, resid
    return WEvaluation(x=x, w=best, residual=best * exp(best) - x,
                       iterations=iterations)


def _pn_float(n: int, row: tuple[int, ...], w: float) -> float:
    """p_n(w) in binary64 by Horner, converting exact entries on the fly."""
    acc = 0.0
    for b in reversed(row):
        acc = acc * w + float(b)
    return -acc if n % 2 == 0 else acc


def w_derivative(n: int, x: float, table: CoefficientTable) -> DerivativeValue:
    """d^nW/dx^n for x > 0 via the closed form and the exact coefficient row."""
    if not 1 <= n <= table.n_max:
        raise ValueError(f"n must be in 1..{table.n_max}, got {n}")
    if not (math.isfinite(x) and x > 0.0):
        raise ValueError(f"derivative route needs x > 0, got {x}")
    w = lambert_w(x).w
    pn = _pn_float(n, table.rows[n], w)
    value = exp(-n * w) * pn / (1.0 + w) ** (2 * n - 1)
    return DerivativeValue(n=n, x=x, value=value, route=ROUTE_CLOSED)


def w_derivative_taylor(n: int, x: float, rel_tol: float = 1e-12) -> DerivativeValue:
    """d^nW/dx^n for |x| < 1/e from the series around 0.

    Terms are accumulated until two consecutive terms fall below rel_tol
    times the running sum; more than 10^4 terms raises ConvergenceError.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if rel_tol <= 0.0:
        raise ValueError("rel_tol must be positive")
    if not (math.isfinite(x) and abs(x) < 1.0 / math.e):
        raise ValueError(f"taylor route needs |x| < 1/e, got {x}")
    if x == 0.0:
        return DerivativeValue(n=n, x=x, value=float((-n) ** (n - 1)),
                               route=ROUTE_TAYLOR)
    log_ax = math.log(abs(x))
    terms: list[float] = []
    total = 0.0
    small_streak = 0
    for m in range(n, n + _MAX_SERIES_TERMS):
        # (-m)^(m-1) x^(m-n) / (m-n)!, assembled in log space
        t = exp((m - 1) * math.log(m) + (m - n) * log_ax - math.lgamma(m - n + 1))
        if (m - 1) % 2:
            t = -t
        if x < 0.0 and (m - n) % 2:
            t = -t
        terms.append(t)
        total += t
        if abs(t) <= rel_tol * abs(total):
            small_streak += 1
            if small_streak == 2:
                break
        else:
            small_streak = 0
    else:
        raise ConvergenceError(
            f"taylor series for n={n}, x={x} did not settle "
            f"within {_MAX_SERIES_TERMS} terms")
    return DerivativeValue(n=n, x=x, value=fsum(terms), route=ROUTE_TAYLOR)


def _central_diff(n: int, x: float, h: float) -> float:
    """Order-n central difference of W at x with step h."""
    vals = [
        (-1) ** i * comb(n, i) * lambert_w(x + (n / 2 - i) * h).w
        for i in range(n + 1)
    ]
    return fsum(vals) / h**n


def w_derivative_fd(n: int, x: float) -> DerivativeValue:
    """Finite-difference oracle for d^nW/dx^n, n <= 5.

    Central difference with step h = max(x, 1)*eps^(1/(n+2)), extrapolated
    once against the doubled step: (4 D(h) - D(2h)) / 3.  Above n = 5 the
    cancellation noise in binary64 makes the estimate meaningless, so that
    is a domain error.  The stencil spans x +- n*h, which must stay > 0.
    """
    if not 1 <= n <= 5:
        raise ValueError("finite-difference oracle is limited to 1 <= n <= 5")
    if not (math.isfinite(x) and x > 0.0):
        raise ValueError(f"finite-difference route needs x > 0, got {x}")
    h = max(x, 1.0) * MACHINE_EPS ** (1.0 / (n + 2))
    value = (4.0 * _central_diff(n, x, h) - _central_diff(n, x, 2.0 * h)) / 3.0
    return DerivativeValue(n=n, x=x, value=value, route=ROUTE_FD)


def pn_series_eval(n: int, w: float, rel_tol: float = 1e-10) -> float:
    """p_n(w) from its series form, for |w| <= 0.2:

        p_n(w) = (1+w)^(2n-1) sum_{s>=0} (-1)^(n+s-1) (n+s)^(n+s-1) w^s e^((n+s)w) / s!

    Each term's rational part (n+s)^(n+s-1) w^s / s! is built exactly from
    the binary64 value of w and only then rounded, which keeps the heavy
    cancellation at positive w from eating into the tolerance.  Stops after
    two consecutive terms below rel_tol times the running sum.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if rel_tol <= 0.0:
        raise ValueError("rel_tol must be positive")
    if not (math.isfinite(w) and abs(w) <= _SERIES_W_BOUND):
        raise ValueError(f"series evaluation needs |w| <= {_SERIES_W_BOUND}, got {w}")
    if w == 0.0:
        return float((-1) ** (n - 1) * n ** (n - 1))
    w_exact = Fraction(w)
    terms: list[float] = []
    total = 0.0
    small_streak = 0
    for s in range(_MAX_SERIES_TERMS):
        ns = n + s
        rational = Fraction(ns ** (ns - 1), factorial(s)) * w_exact**s
        try:
            t = float(rational) * exp(ns * w)
        except OverflowError as err:
            raise ConvergenceError(
                f"series term overflow at n={n}, w={w}, s={s}") from err
        if (ns - 1) % 2:
            t = -t
        terms.append(t)
        total += t
        if abs(t) <= rel_tol * abs(total):
            small_streak += 1
            if small_streak == 2:
                break
        else:
            small_streak = 0
    else:
        raise ConvergenceError(
            f"series for p_{n}({w}) did not settle within {_MAX_SERIES_TERMS} terms")
    return fsum(terms) * (1.0 + w) ** (2 * n - 1)


def bernstein_scan(
    n_max: int, grid: list[float] | tuple[float, ...], table: CoefficientTable
) -> BernsteinScanReport:
    """Check (-1)^(n-1) d^nW/dx^n > 0 for each n <= n_max and x in grid."""
    if not 1 <= n_max <= table.n_max:
        raise ValueError(f"n_max must be in 1..{table.n_max}, got {n_max}")
    if len(grid) == 0:
        raise ValueError("grid must be nonempty")
    if any(not (math.isfinite(x) and x > 0.0) for x in grid):
        raise ValueError("grid points must be finite and > 0")
    violations = []
    for n in range(1, n_max + 1):
        for x in grid:
            value = w_derivative(n, x, table).value
            signed = value if n % 2 else -value
            if not signed > 0.0:
                violations.append((n, x, value))
    return BernsteinScanReport(n_max=n_max, grid=tuple(grid),
                               violations=tuple(violations))


def log_grid(lo: float, hi: float, count: int) -> list[float]:
    """count points spaced evenly in log10 between lo and hi inclusive."""
    if not (lo > 0.0 and hi > lo):
        raise ValueError("need 0 < lo < hi")
    if count < 2:
        raise ValueError("count must be >= 2")
    e_lo = math.log10(lo)
    e_hi = math.log10(hi)
    return [10.0 ** (e_lo + (e_hi - e_lo) * i / (count - 1)) for i in range(count)]
