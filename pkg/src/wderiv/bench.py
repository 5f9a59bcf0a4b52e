"""Wall-time and big-integer-size benchmark of the coefficient routes.

For each route and each row n the timed unit is "produce row n": the
recurrence route derives row n from the previous row (the previous rows are
prepared outside the timer), the closed-form routes evaluate all n entries
directly, and the Carlitz route rebuilds its triangle from scratch (its
memo cache is cleared before every repetition so timings stay cold).
``nanoseconds`` is the best of ``reps`` repetitions; ``max_bits`` is the
largest bit length among the produced entries.
"""
from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable, Sequence

from . import closed_forms, triangle

__all__ = ["BenchRecord", "run_bench", "bench_to_csv"]


@dataclass(frozen=True)
class BenchRecord:
    route: str
    n: int
    nanoseconds: int
    max_bits: int


def _carlitz_row(n: int) -> list[int]:
    closed_forms.clear_carlitz_cache()
    return [closed_forms.beta_carlitz(n, k) for k in range(n)]


_ROW_BUILDERS: dict[str, Callable[[int], Sequence[int]]] = {
    "explicit": lambda n: [closed_forms.beta_explicit(n, k) for k in range(n)],
    "rstirling": lambda n: [closed_forms.beta_rstirling(n, k) for k in range(n)],
    "bernoulli": lambda n: [closed_forms.beta_bernoulli(n, k) for k in range(n)],
    "fdiff": lambda n: [closed_forms.beta_forward_diff(n, k) for k in range(n)],
    "carlitz": _carlitz_row,
}


def run_bench(
    n_max: int, routes: tuple[str, ...], reps: int
) -> list[BenchRecord]:
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    if reps < 1:
        raise ValueError("reps must be >= 1")
    unknown = set(routes) - set(_ROW_BUILDERS) - {"recurrence"}
    if unknown:
        raise ValueError(f"unknown routes: {sorted(unknown)}")

    table = triangle.build_table(n_max)  # previous rows for the recurrence route
    records: list[BenchRecord] = []
    for route in routes:
        for n in range(1, n_max + 1):
            if route == "recurrence":
                if n == 1:
                    unit = lambda: (1,)
                else:
                    prev = table.rows[n - 1]
                    unit = lambda n=n, prev=prev: triangle.recurrence_step(n - 1, prev)
            else:
                unit = lambda n=n, builder=_ROW_BUILDERS[route]: builder(n)
            best = None
            row: Sequence[int] = ()
            for _ in range(reps):
                t0 = time.perf_counter_ns()
                row = unit()
                elapsed = time.perf_counter_ns() - t0
                if best is None or elapsed < best:
                    best = elapsed
            records.append(BenchRecord(
                route=route, n=n, nanoseconds=best,
                max_bits=max(entry.bit_length() for entry in row)))
    return records


def bench_to_csv(records: list[BenchRecord]) -> str:
    lines = ["route,n,nanoseconds,max_bits"]
    lines.extend(
        f"{r.route},{r.n},{r.nanoseconds},{r.max_bits}" for r in records
    )
    return "\n".join(lines) + "\n"
