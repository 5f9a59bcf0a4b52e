import json
import math
import subprocess
import sys

import pytest

from wderiv import build_table, table_to_json, parse_table_csv
from wderiv.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestTableCommand:
    def test_csv_contains_row3(self, capsys):
        code, out, _ = run_cli(capsys, "table", "--n-max", "3")
        assert code == 0
        assert "3,1,8\n" in out
        assert out.startswith("n,k,beta\n")

    def test_json_single_row(self, capsys):
        code, out, _ = run_cli(capsys, "table", "--n-max", "1", "--format", "json")
        assert code == 0
        assert json.loads(out)["rows"] == [["1"]]

    def test_csv_row6(self, capsys):
        code, out, _ = run_cli(capsys, "table", "--n-max", "6")
        assert code == 0
        assert "6,0,7776\n" in out

    def test_round_trips_through_parser(self, capsys):
        code, out, _ = run_cli(capsys, "table", "--n-max", "12")
        assert code == 0
        assert parse_table_csv(out) == build_table(12)

    def test_out_file(self, capsys, tmp_path):
        path = tmp_path / "triangle.csv"
        code, out, _ = run_cli(capsys, "table", "--n-max", "3", "--out", str(path))
        assert code == 0
        assert out == ""
        assert path.read_bytes().decode("ascii").endswith("3,2,2\n")

    def test_unwritable_path(self, capsys):
        code, _, err = run_cli(capsys, "table", "--n-max", "3",
                               "--out", "/nonexistent-dir/t.csv")
        assert code == 2
        assert "error" in err

    def test_bad_n_max(self, capsys):
        code, _, err = run_cli(capsys, "table", "--n-max", "0")
        assert code == 2


class TestVerifyCommand:
    def test_small_clean_run(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--n-max", "5")
        assert code == 0
        assert out.startswith("OK")

    def test_json_report(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--n-max", "4", "--format", "json")
        assert code == 0
        payload = json.loads(out)
        assert payload["passed"] is True
        assert payload["failures"] == []

    def test_route_subset(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--n-max", "4",
                               "--routes", "recurrence,carlitz")
        assert code == 0

    def test_full_battery_to_40(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--n-max", "40")
        assert code == 0
        assert out.startswith("OK")

    def test_unknown_route(self, capsys):
        code, _, err = run_cli(capsys, "verify", "--n-max", "4",
                               "--routes", "recurrence,turbo")
        assert code == 2
        assert "unknown routes" in err

    def test_corrupted_table_detected(self, capsys, tmp_path):
        table = build_table(6)
        rows = [list(r) for r in table.rows]
        rows[4][2] += 1
        corrupted = {"n_max": 6,
                     "rows": [[str(b) for b in row] for row in rows[1:]]}
        path = tmp_path / "bad.json"
        path.write_text(json.dumps(corrupted), encoding="ascii")
        code, out, _ = run_cli(capsys, "verify", "--table", str(path))
        assert code == 1
        assert "FAIL first failure: n=4 k=2" in out

    def test_clean_loaded_table(self, capsys, tmp_path):
        path = tmp_path / "good.json"
        path.write_text(table_to_json(build_table(6)), encoding="ascii")
        code, out, _ = run_cli(capsys, "verify", "--table", str(path))
        assert code == 0

    def test_missing_table_file(self, capsys):
        code, _, err = run_cli(capsys, "verify", "--table", "/no/such/file.json")
        assert code == 2


class TestEvalCommand:
    def test_first_derivative_at_e(self, capsys):
        code, out, _ = run_cli(capsys, "eval", "--x", str(math.e), "--n", "1")
        assert code == 0
        assert "W(x) = 1\n" in out
        assert "0.183939720585721" in out  # 1/(2e)

    def test_taylor_at_zero(self, capsys):
        code, out, _ = run_cli(capsys, "eval", "--x", "0", "--n", "1",
                               "--route", "taylor")
        assert code == 0
        assert "d^1W/dx^1 (taylor) = 1\n" in out

    def test_second_derivative_at_e(self, capsys):
        code, out, _ = run_cli(capsys, "eval", "--x", str(math.e), "--n", "2")
        assert code == 0
        assert "-0.050750731213729" in out  # -3/(8 e^2)

    def test_seventeen_significant_digits(self, capsys):
        code, out, _ = run_cli(capsys, "eval", "--x", "1", "--n", "1")
        assert code == 0
        assert "W(x) = 0.56714329040978384\n" in out

    def test_domain_error_exits_2(self, capsys):
        code, _, err = run_cli(capsys, "eval", "--x", "-1", "--n", "1")
        assert code == 2
        code, _, err = run_cli(capsys, "eval", "--x", "0", "--n", "1")
        assert code == 2  # closed form needs x > 0
        code, _, err = run_cli(capsys, "eval", "--x", "1", "--n", "6",
                               "--route", "finite_difference")
        assert code == 2


class TestBenchCommand:
    def test_shape(self, capsys):
        code, out, _ = run_cli(capsys, "bench", "--n-max", "20",
                               "--routes", "recurrence,explicit", "--reps", "3")
        assert code == 0
        lines = out.strip().split("\n")
        assert lines[0] == "route,n,nanoseconds,max_bits"
        assert len(lines) == 1 + 2 * 20
        assert all(len(line.split(",")) == 4 for line in lines[1:])

    def test_recurrence_bits_at_40(self, capsys):
        code, out, _ = run_cli(capsys, "bench", "--n-max", "40",
                               "--routes", "recurrence", "--reps", "1")
        assert code == 0
        last = out.strip().split("\n")[-1]
        route, n, _, max_bits = last.split(",")
        assert (route, n) == ("recurrence", "40")
        assert int(max_bits) >= (40**39).bit_length()

    def test_zero_reps_is_usage_error(self, capsys):
        code, _, err = run_cli(capsys, "bench", "--n-max", "5", "--reps", "0")
        assert code == 2

    def test_unknown_route(self, capsys):
        code, _, err = run_cli(capsys, "bench", "--n-max", "5", "--routes", "magic")
        assert code == 2


class TestUsage:
    def test_missing_subcommand(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main([])
        assert exc.value.code == 2

    def test_module_entry_point(self):
        proc = subprocess.run(
            [sys.executable, "-m", "wderiv", "table", "--n-max", "3"],
            capture_output=True, text=True, timeout=60)
        assert proc.returncode == 0
        assert "3,1,8" in proc.stdout

    def test_module_entry_point_verify(self):
        proc = subprocess.run(
            [sys.executable, "-m", "wderiv", "verify", "--n-max", "4"],
            capture_output=True, text=True, timeout=120)
        assert proc.returncode == 0
        assert proc.stdout.startswith("OK")
