"""Exhaustive exact verification of a coefficient table.

Everything here is an exact integer comparison.  The checks:

* route agreement: every table entry against the recurrence (always over
  the full table, so any corrupted entry is caught) and against the chosen
  closed-form routes up to a configurable row;
* sequence properties per row: positivity, log-concavity of the row and of
  k! times the row, unimodality, the strict ratio bound and the binomial
  inequality (the latter two for n >= 3);
* identities: the alternating row sum against (2n-3)!!, the factorial
  identity for the last entry, and the inversion round trip
  row -> r-Stirling values -> row;
* row sums of the Carlitz-style triangle against (2 kappa - 1)!! at several
  lambda values (checking lambda-independence empirically).

Checks are pure functions of an immutable table; rows could be fanned out
to parallel workers, but results are reported in (n, k) order regardless.
"""
from __future__ import annotations

from dataclasses import dataclass

from . import closed_forms, properties, triangle
from .triangle import CoefficientTable

__all__ = [
    "CheckFailure",
    "ROUTE_NAMES",
    "DEFAULT_ROUTE_N_MAX",
    "DEFAULT_PROPERTY_N_MAX",
    "verify_routes",
    "verify_properties",
    "verify_identities",
    "verify_carlitz_sums",
    "run_verification",
    "lambda_values",
]

ROUTE_NAMES = ("recurrence", "explicit", "rstirling", "bernoulli", "fdiff", "carlitz")

DEFAULT_ROUTE_N_MAX = 40
DEFAULT_PROPERTY_N_MAX = 200
DEFAULT_CARLITZ_KAPPA_MAX = 30


@dataclass(frozen=True)
class CheckFailure:
    """One failed check; k is None for row-level and identity checks."""

    n: int
    k: int | None
    check: str
    detail: str

    def sort_key(self) -> tuple[int, int, str]:
        # row-level checks (k is None) sort after any entry-precise failure
        # in the same row, so the first reported failure names an entry
        return (self.n, 10**9 if self.k is None else self.k, self.check)


_ROUTE_FUNCS = {
    "explicit": closed_forms.beta_explicit,
    "rstirling": closed_forms.beta_rstirling,
    "bernoulli": closed_forms.beta_bernoulli,
    "fdiff": closed_forms.beta_forward_diff,
    "carlitz": closed_forms.beta_carlitz,
}


def verify_routes(
    table: CoefficientTable,
    routes: tuple[str, ...] = ROUTE_NAMES,
    n_max: int | None = None,
) -> list[CheckFailure]:
    """Compare table entries against the requested routes.

    The recurrence reference always covers every row of the table; the
    closed-form routes are evaluated up to n_max (default 40) because their
    cost grows cubically with n.
    """
    unknown = set(routes) - set(ROUTE_NAMES)
    if unknown:
        raise ValueError(f"unknown routes: {sorted(unknown)}")
    n_max = min(table.n_max, DEFAULT_ROUTE_N_MAX if n_max is None else n_max)
    failures: list[CheckFailure] = []

    if "recurrence" in routes:
        reference = triangle.build_table(table.n_max)
        for n in range(1, table.n_max + 1):
            for k in range(n):
                got, want = table.rows[n][k], reference.rows[n][k]
                if got != want:
                    failures.append(CheckFailure(
                        n, k, "route:recurrence",
                        f"table has {got}, recurrence gives {want}"))

    for name, func in _ROUTE_FUNCS.items():
        if name not in routes:
            continue
        for n in range(1, n_max + 1):
            for k in range(n):
                got, want = table.rows[n][k], func(n, k)
                if got != want:
                    failures.append(CheckFailure(
                        n, k, f"route:{name}",
                        f"table has {got}, {name} gives {want}"))
    return failures


def verify_properties(
    table: CoefficientTable, n_max: int | None = None
) -> list[CheckFailure]:
    """Run every sequence-property check on each row up to n_max."""
    n_max = min(table.n_max, DEFAULT_PROPERTY_N_MAX if n_max is None else n_max)
    failures: list[CheckFailure] = []
    for n in range(1, n_max + 1):
        row = table.rows[n]
        positive = properties.is_positive(row)
        reports = [positive, properties.is_unimodal(row)]
        if positive.holds:
            reports.append(properties.is_log_concave(row))
            weighted = properties.is_log_concave_weighted(row)
            reports.append(weighted)
            if n >= 3:
                reports.append(properties.check_ratio_bound(n, row))
                if weighted.holds:
                    reports.append(properties.check_lemma1(row))
        for report in reports:
            if not report.holds:
                failures.append(CheckFailure(
                    n, None, f"property:{report.property}",
                    f"first violation at index {report.first_violation}"))
    return failures


def verify_identities(
    table: CoefficientTable, n_max: int | None = None
) -> list[CheckFailure]:
    """Alternating sum, factorial identity and inversion round trip per row."""
    n_max = table.n_max if n_max is None else min(n_max, table.n_max)
    failures: list[CheckFailure] = []
    for n in range(1, n_max + 1):
        alt = triangle.alternating_sum(n, table)
        want = triangle.double_factorial(2 * n - 3)
        if alt != want:
            failures.append(CheckFailure(
                n, None, "identity:alternating_sum",
                f"sum {alt} != (2n-3)!! = {want}"))

        left, right = closed_forms.factorial_identity(n)
        if left != right:
            failures.append(CheckFailure(
                n, None, "identity:factorial",
                f"left {left} != (n-1)! = {right}"))

        # round trip: row -> r-Stirling values -> row
        stirlings = [closed_forms.rstirling_from_beta(n, m, table) for m in range(n)]
        for m, s in enumerate(stirlings):
            direct = closed_forms.rstirling_shifted(n - 1 + m, m, n)
            if s != direct:
                failures.append(CheckFailure(
                    n, m, "identity:inversion",
                    f"inverted value {s} != direct r-Stirling {direct}"))
        for k in range(n):
            back = sum(
                (-1) ** m * closed_forms._choose(2 * n - 1, k - m) * stirlings[m]
                for m in range(k + 1)
            )
            if back != table.rows[n][k]:
                failures.append(CheckFailure(
                    n, k, "identity:inversion_roundtrip",
                    f"reassembled {back} != table entry {table.rows[n][k]}"))
    return failures


def lambda_values(kappa: int, samples: int) -> list[int]:
    """Deterministic distinct lambda values for the row-sum check."""
    pool = [kappa + 1, 0, 7, 11, 13, -3, 17, 19, 23, -5]
    out: list[int] = []
    for lam in pool:
        if lam not in out:
            out.append(lam)
        if len(out) == samples:
            return out
    base = 29
    while len(out) < samples:
        if base not in out:
            out.append(base)
        base += 2
    return out


def verify_carlitz_sums(kappa_max: int, samples: int = 3) -> list[CheckFailure]:
    """Row sums of the Carlitz triangle equal (2 kappa - 1)!! for every lambda."""
    if samples < 1:
        raise ValueError("samples must be >= 1")
    failures: list[CheckFailure] = []
    for kappa in range(kappa_max + 1):
        want = triangle.double_factorial(2 * kappa - 1)
        for lam in lambda_values(kappa, samples):
            got = closed_forms.carlitz_row_sum(kappa, lam)
            if got != want:
                failures.append(CheckFailure(
                    kappa, None, "identity:carlitz_row_sum",
                    f"sum {got} at lambda={lam} != (2k-1)!! = {want}"))
    return failures


def run_verification(
    table: CoefficientTable,
    routes: tuple[str, ...] = ROUTE_NAMES,
    route_n_max: int | None = None,
    property_n_max: int | None = None,
    identity_n_max: int | None = None,
    lambda_samples: int = 3,
) -> list[CheckFailure]:
    """Run the full battery and return all failures sorted by (n, k, check)."""
    failures = verify_routes(table, routes, route_n_max)
    failures += verify_properties(table, property_n_max)
    if identity_n_max is None:
        identity_n_max = min(table.n_max, DEFAULT_ROUTE_N_MAX)
    failures += verify_identities(table, identity_n_max)
    kappa_max = min(identity_n_max, DEFAULT_CARLITZ_KAPPA_MAX)
    failures += verify_carlitz_sums(kappa_max, lambda_samples)
    return sorted(failures, key=CheckFailure.sort_key)
