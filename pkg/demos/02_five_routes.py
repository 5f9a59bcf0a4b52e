"""Compute the same coefficients by five unrelated routes.

Besides the row recurrence there are four closed forms: an explicit double
sum, shifted r-Stirling numbers, Bernoulli polynomials of negative order,
iterated forward differences, and a triangular recurrence of integer
polynomials evaluated at an integer point.  They all must agree bit for
bit, which is a strong consistency check on each of them.
"""
import time

from wderiv import (
    beta_bernoulli,
    beta_carlitz,
    beta_explicit,
    beta_forward_diff,
    beta_rstirling,
    build_table,
)

N = 12
ROUTES = {
    "explicit sum": beta_explicit,
    "r-Stirling": beta_rstirling,
    "Bernoulli": beta_bernoulli,
    "forward diff": beta_forward_diff,
    "Carlitz": beta_carlitz,
}

table = build_table(N)
print(f"row {N} by the recurrence:\n  {list(table.rows[N])}\n")

for name, route in ROUTES.items():
    t0 = time.perf_counter()
    row = [route(N, k) for k in range(N)]
    dt = (time.perf_counter() - t0) * 1e3
    match = tuple(row) == table.rows[N]
    print(f"  {name:13s}: match={match}  ({dt:6.2f} ms)")

print("\nchecking every entry up to n = 20 against every route...")
table = build_table(20)
mismatches = 0
for n in range(1, 21):
    for k in range(n):
        expected = table.rows[n][k]
        for route in ROUTES.values():
            if route(n, k) != expected:
                mismatches += 1
print(f"entries checked: {20 * 21 // 2}, route values compared: "
      f"{5 * 20 * 21 // 2}, mismatches: {mismatches}")
