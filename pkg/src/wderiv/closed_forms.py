"""Closed-form routes to the triangle entries, and the identities among them.

Five independent ways to produce beta(n, k) are implemented here or in
:mod:`wderiv.triangle`:

* the row recurrence (``triangle.build_table``),
* an explicit double sum (``beta_explicit``),
* shifted r-Stirling numbers of the second kind (``beta_rstirling``),
* Bernoulli polynomials of negative integer order (``beta_bernoulli``),
* iterated forward differences of a power (``beta_forward_diff``),
* a triangular-recurrence family of integer polynomials evaluated at an
  integer point (``beta_carlitz``).

Every route that assembles an integer through rational arithmetic ends with
an integrality assertion, so the algebraic identities double as executable
consistency checks: a non-integer total raises :class:`ConsistencyError`.
Binomial coefficients follow the convention C(a, b) = 0 for b < 0 or b > a,
which keeps all sums total.
"""
from __future__ import annotations

from fractions import Fraction
from math import comb, factorial

from .triangle import CoefficientTable

__all__ = [
    "ConsistencyError",
    "beta_explicit",
    "rstirling_shifted",
    "beta_rstirling",
    "bernoulli_higher",
    "beta_bernoulli",
    "forward_diff_power",
    "beta_forward_diff",
    "carlitz_B",
    "beta_carlitz",
    "carlitz_row_sum",
    "clear_carlitz_cache",
    "rstirling_from_beta",
    "factorial_identity",
]


class ConsistencyError(ArithmeticError):
    """An integer-valued sum came out with a denominator != 1 (a bug, not bad input)."""


def _choose(a: int, b: int) -> int:
    return comb(a, b) if 0 <= b <= a else 0


def _as_integer(total: Fraction, context: str) -> int:
    if total.denominator != 1:
        raise ConsistencyError(f"{context}: non-integer result {total}")
    return total.numerator


def _check_nk(n: int, k: int) -> None:
    if n < 1:
        raise ValueError("n must be >= 1")
    if not 0 <= k <= n - 1:
        raise ValueError(f"k must be in 0..{n - 1}, got {k}")


def beta_explicit(n: int, k: int) -> int:
    """beta(n, k) by the explicit double sum

        sum_{m=0}^{k} (1/m!) C(2n-1, k-m) sum_{q=0}^{m} C(m, q) (-1)^q (q+n)^(m+n-1).
    """
    _check_nk(n, k)
    total = Fraction(0)
    for m in range(k + 1):
        inner = sum(
            comb(m, q) * (-1) ** q * (q + n) ** (m + n - 1) for q in range(m + 1)
        )
        total += Fraction(_choose(2 * n - 1, k - m) * inner, factorial(m))
    return _as_integer(total, f"beta_explicit({n}, {k})")


def rstirling_shifted(n: int, m: int, r: int) -> int:
    """The shifted r-Stirling number of the second kind {n+r brace m+r}_r.

    Computed from the closed sum (1/m!) sum_q (-1)^(m-q) C(m, q) (q+r)^n.
    It counts partitions of n+r elements into m+r nonempty blocks with the
    first r elements in distinct blocks; in particular the m = 0 case is r^n.
    """
    if n < 0 or m < 0 or r < 0:
        raise ValueError("arguments must be nonnegative")
    total = Fraction(
        sum((-1) ** (m - q) * comb(m, q) * (q + r) ** n for q in range(m + 1)),
        factorial(m),
    )
    return _as_integer(total, f"rstirling_shifted({n}, {m}, {r})")


def beta_rstirling(n: int, k: int) -> int:
    """beta(n, k) as an alternating binomial sum of shifted r-Stirling numbers."""
    _check_nk(n, k)
    return sum(
        (-1) ** m * _choose(2 * n - 1, k - m) * rstirling_shifted(n - 1 + m, m, n)
        for m in range(k + 1)
    )


def bernoulli_higher(order: int, m: int, r: int | Fraction) -> Fraction:
    """Bernoulli polynomial of higher order at negative integer order, B_order^(-m)(r).

    Closed sum: order!/(m+order)! * sum_q (-1)^(m-q) C(m, q) (q+r)^(m+order).
    The m = 0 case reduces to r^order.
    """
    if order < 0 or m < 0:
        raise ValueError("order and m must be nonnegative")
    acc = sum(
        (-1) ** (m - q) * comb(m, q) * Fraction(q + r) ** (m + order)
        for q in range(m + 1)
    )
    return Fraction(factorial(order), factorial(m + order)) * acc


def beta_bernoulli(n: int, k: int) -> int:
    """beta(n, k) via Bernoulli polynomials of negative order."""
    _check_nk(n, k)
    total = Fraction(0)
    for m in range(k + 1):
        total += (
            (-1) ** m
            * _choose(2 * n - 1, k - m)
            * comb(m + n - 1, n - 1)
            * bernoulli_higher(n - 1, m, n)
        )
    return _as_integer(total, f"beta_bernoulli({n}, {k})")


def forward_diff_power(m: int, n: int) -> int:
    """m-th forward difference of x^(m+n-1) evaluated at x = n.

    Delta^m f(n) = sum_q (-1)^(m-q) C(m, q) f(n+q) with f(x) = x^(m+n-1).
    """
    if m < 0:
        raise ValueError("m must be nonnegative")
    if n < 1:
        raise ValueError("n must be >= 1")
    return sum(
        (-1) ** (m - q) * comb(m, q) * (n + q) ** (m + n - 1) for q in range(m + 1)
    )


def beta_forward_diff(n: int, k: int) -> int:
    """beta(n, k) via iterated forward differences."""
    _check_nk(n, k)
    total = Fraction(0)
    for m in range(k + 1):
        total += Fraction(
            _choose(2 * n - 1, k - m) * (-1) ** m * forward_diff_power(m, n),
            factorial(m),
        )
    return _as_integer(total, f"beta_forward_diff({n}, {k})")


# Triangle rows of B(kappa, j, lam), cached per lam.  Entries are recomputed
# idempotently if two threads race on the same lam; worst case is wasted work.
_carlitz_cache: dict[int, list[tuple[int, ...]]] = {}


def _carlitz_rows(kappa: int, lam: int) -> list[tuple[int, ...]]:
    rows = _carlitz_cache.setdefault(lam, [(1,)])
    while len(rows) <= kappa:
        kk = len(rows)
        prev = rows[-1]

        def prev_at(j: int) -> int:
            return prev[j] if 0 <= j < kk else 0

        rows.append(
            tuple(
                (kk + j - lam) * prev_at(j) + (kk - j + lam) * prev_at(j - 1)
                for j in range(kk + 1)
            )
        )
    return rows


def carlitz_B(kappa: int, j: int, lam: int) -> int:
    """B(kappa, j, lam) by the three-term recurrence

        B(k, j, lam) = (k + j - lam) B(k-1, j, lam) + (k - j + lam) B(k-1, j-1, lam)

    with B(0, j, lam) = [j == 0], and 0 outside 0 <= j <= kappa.  The j = 0
    column is the rising factorial (1-lam)(2-lam)...(kappa-lam).  Values are
    memoized per lam.
    """
    if kappa < 0:
        raise ValueError("kappa must be nonnegative")
    if j < 0 or j > kappa:
        return 0
    return _carlitz_rows(kappa, lam)[kappa][j]


def clear_carlitz_cache() -> None:
    """Drop the memoized B(kappa, j, lam) rows (used by the benchmark)."""
    _carlitz_cache.clear()


def beta_carlitz(n: int, k: int) -> int:
    """beta(n, k) = (-1)^k B(n-1, n-1-k, n)."""
    _check_nk(n, k)
    value = carlitz_B(n - 1, n - 1 - k, n)
    return -value if k % 2 else value


def carlitz_row_sum(kappa: int, lam: int) -> int:
    """sum_j B(kappa, j, lam); equals (2*kappa - 1)!! for every lam."""
    if kappa < 0:
        raise ValueError("kappa must be nonnegative")
    return sum(_carlitz_rows(kappa, lam)[kappa])


def rstirling_from_beta(n: int, m: int, table: CoefficientTable) -> int:
    """Invert the r-Stirling route: recover {2n-1+m brace n+m}_n from row n.

    The alternating row is a binomial convolution of the r-Stirling sequence
    with the coefficients of (1-w)^(2n-1); multiplying the generating function
    by (1-w)^-(2n-1) inverts it:

        {2n-1+m brace n+m}_n = sum_k (-1)^k beta(n, k) C(2n-2+m-k, 2n-2).
    """
    if m < 0:
        raise ValueError("m must be nonnegative")
    row = table.row(n)
    return sum(
        (-1) ** k * b * _choose(2 * n - 2 + m - k, 2 * n - 2)
        for k, b in enumerate(row)
    )


def factorial_identity(n: int) -> tuple[int, int]:
    """Both sides of the last-entry identity

        sum_{m=0}^{n-1} (-1)^m C(2n-1, n-m-1) {2n-1+m brace n+m}_n = (n-1)!.

    Returns (left, right); they agree for every n >= 1.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    left = sum(
        (-1) ** m * _choose(2 * n - 1, n - m - 1) * rstirling_shifted(n - 1 + m, m, n)
        for m in range(n)
    )
    return left, factorial(n - 1)
