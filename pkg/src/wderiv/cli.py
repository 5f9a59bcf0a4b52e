"""Command line front end.

Subcommands:

* ``table``  -- emit the coefficient triangle as CSV or JSON,
* ``verify`` -- run the exact verification battery, exit 0 iff it all holds,
* ``eval``   -- evaluate W(x) and one derivative, 17 significant digits,
* ``bench``  -- time the routes row by row and report peak entry bit sizes.

Exit codes: 0 success, 1 verification failure, 2 usage or domain error.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import bench, numeric, tableio, triangle, verify

__all__ = ["main", "build_parser"]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wderiv",
        description="Exact coefficients of the Lambert W derivative polynomials",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_table = sub.add_parser("table", help="emit the coefficient triangle")
    p_table.add_argument("--n-max", type=int, required=True)
    p_table.add_argument("--format", choices=("csv", "json"), default="csv")
    p_table.add_argument("--out", default=None, help="output path (default stdout)")

    p_verify = sub.add_parser("verify", help="run the exact verification battery")
    p_verify.add_argument("--n-max", type=int, default=None,
                          help="row limit for all checks (default: 40 for route "
                               "agreement, 200 for the recurrence-only property "
                               "checks)")
    p_verify.add_argument("--table", default=None,
                          help="verify a table loaded from this CSV/JSON file "
                               "instead of a freshly built one")
    p_verify.add_argument("--routes", default=",".join(verify.ROUTE_NAMES),
                          help="comma list from: " + ", ".join(verify.ROUTE_NAMES))
    p_verify.add_argument("--lambda-samples", type=int, default=3)
    p_verify.add_argument("--format", choices=("text", "json"), default="text")

    p_eval = sub.add_parser("eval", help="evaluate W and one derivative")
    p_eval.add_argument("--x", type=float, required=True)
    p_eval.add_argument("--n", type=int, default=1)
    p_eval.add_argument("--route",
                        choices=(numeric.ROUTE_CLOSED, numeric.ROUTE_TAYLOR,
                                 numeric.ROUTE_FD),
                        default=numeric.ROUTE_CLOSED)
    p_eval.add_argument("--tol-rel", type=float, default=1e-12,
                        help="relative tolerance for the taylor route")

    p_bench = sub.add_parser("bench", help="benchmark the routes")
    p_bench.add_argument("--n-max", type=int, required=True)
    p_bench.add_argument("--routes", default="recurrence,explicit",
                         help="comma list from: " + ", ".join(verify.ROUTE_NAMES))
    p_bench.add_argument("--reps", type=int, default=3)
    p_bench.add_argument("--out", default=None)

    return parser


def _write_output(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="ascii", newline="") as fh:
            fh.write(text)


def _cmd_table(args: argparse.Namespace) -> int:
    table = triangle.build_table(args.n_max)
    text = (tableio.table_to_csv(table) if args.format == "csv"
            else tableio.table_to_json(table))
    _write_output(text, args.out)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    routes = tuple(r for r in args.routes.split(",") if r)
    if args.table is not None:
        table = tableio.load_table(args.table)
        route_n_max = args.n_max if args.n_max is not None else table.n_max
        property_n_max = identity_n_max = route_n_max
    elif args.n_max is not None:
        table = triangle.build_table(args.n_max)
        route_n_max = property_n_max = identity_n_max = args.n_max
    else:
        table = triangle.build_table(verify.DEFAULT_PROPERTY_N_MAX)
        route_n_max = verify.DEFAULT_ROUTE_N_MAX
        property_n_max = verify.DEFAULT_PROPERTY_N_MAX
        identity_n_max = verify.DEFAULT_ROUTE_N_MAX

    failures = verify.run_verification(
        table,
        routes=routes,
        route_n_max=route_n_max,
        property_n_max=property_n_max,
        identity_n_max=identity_n_max,
        lambda_samples=args.lambda_samples,
    )
    if args.format == "json":
        payload = {
            "passed": not failures,
            "n_max": table.n_max,
            "failures": [
                {"n": f.n, "k": f.k, "check": f.check, "detail": f.detail}
                for f in failures
            ],
        }
        sys.stdout.write(json.dumps(payload, separators=(",", ":")) + "\n")
    else:
        if failures:
            first = failures[0]
            sys.stdout.write(
                f"FAIL first failure: n={first.n} k={first.k} check={first.check}\n")
            for f in failures:
                sys.stdout.write(
                    f"FAIL n={f.n} k={f.k} check={f.check} {f.detail}\n")
        else:
            sys.stdout.write(
                f"OK n_max={table.n_max} routes={','.join(routes)} "
                f"all checks passed\n")
    return 1 if failures else 0


def _cmd_eval(args: argparse.Namespace) -> int:
    evaluation = numeric.lambert_w(args.x)
    sys.stdout.write(f"W(x) = {evaluation.w:.17g}\n")
    sys.stdout.write(f"residual = {evaluation.residual:.17g}\n")
    sys.stdout.write(f"iterations = {evaluation.iterations}\n")
    if args.route == numeric.ROUTE_TAYLOR:
        deriv = numeric.w_derivative_taylor(args.n, args.x, rel_tol=args.tol_rel)
    elif args.route == numeric.ROUTE_FD:
        deriv = numeric.w_derivative_fd(args.n, args.x)
    else:
        table = triangle.build_table(args.n)
        deriv = numeric.w_derivative(args.n, args.x, table)
    sys.stdout.write(
        f"d^{args.n}W/dx^{args.n} ({deriv.route}) = {deriv.value:.17g}\n")
    return 0


def _cmd_bench(args: argparse.Namespace) -> int:
    routes = tuple(r for r in args.routes.split(",") if r)
    records = bench.run_bench(args.n_max, routes, args.reps)
    _write_output(bench.bench_to_csv(records), args.out)
    return 0


_COMMANDS = {
    "table": _cmd_table,
    "verify": _cmd_verify,
    "eval": _cmd_eval,
    "bench": _cmd_bench,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (ValueError, OSError) as err:
        sys.stderr.write(f"error: {err}\n")
        return 2
    except ArithmeticError as err:
        sys.stderr.write(f"numeric fault: {err}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
