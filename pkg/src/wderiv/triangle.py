"""Exact coefficient triangle of the Lambert W derivative polynomials.

The n-th derivative of the principal branch of the Lambert W function has
the closed form

    d^n W / dx^n = exp(-n W) p_n(W) / (1 + W)^(2n - 1),    n >= 1,

where p_n is a polynomial of degree n - 1.  Writing

    p_n(w) = (-1)^(n - 1) * sum_{k=0}^{n-1} beta(n, k) * w^k

factors out the global sign and makes every beta(n, k) a positive integer.
This module builds the beta triangle from the polynomial recurrence

    p_{n+1}(w) = -(n*w + 3n - 1) * p_n(w) + (1 + w) * p_n'(w),    p_1 = 1,

which in coefficient form reads

    beta(n+1, k) = (3n - k - 1)*beta(n, k) + n*beta(n, k-1) - (k+1)*beta(n, k+1)

applied at every 0 <= k <= n with out-of-range entries taken as zero.
All arithmetic is exact (Python integers and fractions); nothing in this
module rounds.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

__all__ = [
    "CoefficientTable",
    "SignedPolynomial",
    "BOUNDARY_KINDS",
    "build_table",
    "recurrence_step",
    "boundary_value",
    "poly_eval_exact",
    "alternating_sum",
    "double_factorial",
]

BOUNDARY_KINDS = ("first", "second", "last", "second_last")


@dataclass(frozen=True)
class CoefficientTable:
    """Dense triangle of the coefficients beta(n, k), 1 <= n <= n_max.

    ``rows[n]`` holds row n (a tuple of length n whose entry k is
    beta(n, k)); ``rows[0]`` is an empty placeholder so that indexing
    matches the mathematical row number.  Instances are immutable and
    safe to share between threads.
    """

    n_max: int
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        if self.n_max < 1:
            raise ValueError("n_max must be >= 1")
        if len(self.rows) != self.n_max + 1 or self.rows[0] != ():
            raise ValueError("rows must hold an empty placeholder plus n_max rows")
        for n in range(1, self.n_max + 1):
            if len(self.rows[n]) != n:
                raise ValueError(f"row {n} must have exactly {n} entries")

    def row(self, n: int) -> tuple[int, ...]:
        if not 1 <= n <= self.n_max:
            raise ValueError(f"n must be in 1..{self.n_max}, got {n}")
        return self.rows[n]

    def beta(self, n: int, k: int) -> int:
        """beta(n, k), with the zero-padding convention outside 0 <= k < n."""
        row = self.row(n)
        if k < 0 or k >= n:
            return 0
        return row[k]


@dataclass(frozen=True)
class SignedPolynomial:
    """The polynomial p_n(w) itself, signs included.

    ``coeffs[k]`` is the coefficient of w^k, equal to (-1)^(n-1)*beta(n, k);
    the degree is n - 1 and the leading coefficient has magnitude (n-1)!.
    """

    n: int
    coeffs: tuple[int, ...]

    @classmethod
    def from_table(cls, table: CoefficientTable, n: int) -> SignedPolynomial:
        sign = -1 if n % 2 == 0 else 1
        return cls(n=n, coeffs=tuple(sign * b for b in table.row(n)))

    @property
    def degree(self) -> int:
        return self.n - 1

    @property
    def leading_coefficient(self) -> int:
        return self.coeffs[-1]

    def evaluate(self, w: int | Fraction) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * w + c
        return acc


def recurrence_step(n: int, row: tuple[int, ...]) -> tuple[int, ...]:
    """Derive row n+1 from row n of the beta triangle.

    Entries outside the row are zero, so the recurrence applies uniformly
    at every index including the boundaries.
    """
    if len(row) != n:
        raise ValueError("row length must equal n")

    def b(k: int) -> int:
        return row[k] if 0 <= k < n else 0

    return tuple(
        (3 * n - k - 1) * b(k) + n * b(k - 1) - (k + 1) * b(k + 1)
        for k in range(n + 1)
    )


def build_table(n_max: int) -> CoefficientTable:
    """Build the triangle for 1 <= n <= n_max by the recurrence route."""
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    rows: list[tuple[int, ...]] = [(), (1,)]
    for n in range(1, n_max):
        rows.append(recurrence_step(n, rows[n]))
    return CoefficientTable(n_max=n_max, rows=tuple(rows))


def boundary_value(n: int, kind: str) -> int:
    """Closed form for a boundary entry of row n.

    kind "first" is beta(n, 0) = n^(n-1), "second" is beta(n, 1),
    "last" is beta(n, n-1) = (n-1)!, and "second_last" is beta(n, n-2);
    "second" and "second_last" require n >= 2.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if kind == "first":
        return n ** (n - 1)
    if kind == "last":
        return factorial(n - 1)
    if n < 2:
        if kind in ("second", "second_last"):
            raise ValueError(f"kind {kind!r} requires n >= 2")
        raise ValueError(f"unknown kind {kind!r}")
    if kind == "second":
        return 3 * n**n - (n + 1) ** n - n ** (n - 1)
    if kind == "second_last":
        return (2 * n - 2) * factorial(n - 1)
    raise ValueError(f"unknown kind {kind!r}")


def poly_eval_exact(n: int, table: CoefficientTable, w: int | Fraction) -> Fraction:
    """Evaluate p_n(w) = (-1)^(n-1) * sum_k beta(n, k) w^k exactly.

    Horner's scheme over exact rationals; accepts integer or Fraction w.
    """
    row = table.row(n)
    acc = Fraction(0)
    for b in reversed(row):
        acc = acc * w + b
    return -acc if n % 2 == 0 else acc


def alternating_sum(n: int, table: CoefficientTable) -> int:
    """sum_k (-1)^k beta(n, k); equals (2n-3)!! with the (-1)!! = 1 convention."""
    row = table.row(n)
    return sum(b if k % 2 == 0 else -b for k, b in enumerate(row))


def double_factorial(m: int) -> int:
    """m!! = m*(m-2)*(m-4)*..., with (-1)!! = 0!! = 1 (empty products)."""
    if m < -1:
        raise ValueError("double factorial needs m >= -1")
    out = 1
    while m > 1:
        out *= m
        m -= 2
    return out
