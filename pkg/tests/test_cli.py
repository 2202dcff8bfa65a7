import csv
import io
import json
import math
import os

import pytest

from lcmbounds import cli


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestBoundsCommand:
    def test_table(self, capsys):
        code, out, _ = run_cli(capsys, "bounds", "--u0", "1", "--r", "2", "--n", "4")
        assert code == 0
        assert "L_n = 315" in out
        assert "126" in out
        assert "true" in out

    def test_gcd_violation_exits_2(self, capsys):
        code, _, err = run_cli(capsys, "bounds", "--u0", "2", "--r", "2", "--n", "4")
        assert code == 2
        assert "gcd" in err

    def test_equality_instance_ratio_one(self, capsys):
        code, out, _ = run_cli(capsys, "bounds", "--u0", "3", "--r", "4", "--n", "3")
        assert code == 0
        assert "ratio L_n/best = 1 " in out

    def test_json_schema(self, capsys):
        code, out, _ = run_cli(
            capsys, "bounds", "--u0", "1", "--r", "2", "--n", "4", "--format", "json"
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["schema_version"] == 1
        assert payload["lcm"] == "315"
        variants = {rec["variant"] for rec in payload["records"]}
        assert "multi_prime" in variants

    def test_csv_format(self, capsys):
        code, out, _ = run_cli(
            capsys, "bounds", "--u0", "1", "--r", "2", "--n", "4", "--format", "csv"
        )
        assert code == 0
        rows = list(csv.reader(io.StringIO(out)))
        assert rows[0][:4] == ["u0", "r", "n", "lcm"]
        assert all(row[3] == "315" for row in rows[1:])


class TestScanCommand:
    def test_hundred_rows_nonnegative_ratio(self, capsys):
        code, out, _ = run_cli(
            capsys, "scan", "--u0", "1", "--r", "2", "--n-from", "1", "--n-to", "100"
        )
        assert code == 0
        rows = list(csv.DictReader(io.StringIO(out)))
        assert len(rows) == 100
        assert all(float(row["ratio_log"]) >= 0 for row in rows)

    def test_empty_range_is_header_only(self, capsys):
        code, out, _ = run_cli(
            capsys, "scan", "--u0", "1", "--r", "2", "--n-from", "5", "--n-to", "4"
        )
        assert code == 0
        assert out.strip() == ",".join(cli.SCAN_COLUMNS)

    def test_tan_hong_column_transition(self, capsys):
        code, out, _ = run_cli(
            capsys, "scan", "--u0", "1", "--r", "2", "--n-from", "10", "--n-to", "13"
        )
        assert code == 0
        rows = {row["n"]: row for row in csv.DictReader(io.StringIO(out))}
        assert rows["11"]["log_tan_hong_opt"] == ""
        assert rows["12"]["log_tan_hong_opt"] != ""

    def test_workers_byte_identical(self, tmp_path, capsys):
        serial = tmp_path / "serial.csv"
        parallel = tmp_path / "parallel.csv"
        base = ["scan", "--u0", "3", "--r", "4", "--n-from", "0", "--n-to", "40"]
        assert cli.main(base + ["--out", str(serial)]) == 0
        assert cli.main(base + ["--workers", "3", "--out", str(parallel)]) == 0
        assert serial.read_bytes() == parallel.read_bytes()

    def test_missing_range_is_usage_error(self, capsys):
        code, _, err = run_cli(capsys, "scan", "--u0", "1", "--r", "2")
        assert code == 2
        assert "--n" in err


class TestSharpnessCommand:
    def test_r2_n4(self, capsys):
        code, out, _ = run_cli(capsys, "sharpness", "--r", "2", "--n", "4")
        assert code == 0
        assert "u0 = 3" in out
        assert "A(n,0) = 8" in out
        assert "match: true" in out

    def test_r2_n1(self, capsys):
        code, out, _ = run_cli(capsys, "sharpness", "--r", "2", "--n", "1")
        assert code == 0
        assert "u0 = 1" in out
        assert "A(n,0) = 1" in out
        assert "L_n = 3" in out

    def test_r3_n6(self, capsys):
        code, out, _ = run_cli(capsys, "sharpness", "--r", "3", "--n", "6")
        assert code == 0
        assert "u0 = 20" in out
        assert "A(n,0) = 9" in out

    def test_composite_r_rejected(self, capsys):
        code, _, err = run_cli(capsys, "sharpness", "--r", "4", "--n", "5")
        assert code == 2
        assert "prime" in err

    def test_json(self, capsys):
        code, out, _ = run_cli(
            capsys, "sharpness", "--r", "2", "--n", "4", "--format", "json"
        )
        assert code == 0
        payload = json.loads(out)
        assert payload["a_n0"] == "8"
        assert payload["a_equals_smooth_part"] is True
        assert payload["ratio_corrected_within_n_plus_1"] is True


class TestAsymptCommand:
    def test_columns_and_flags(self, capsys):
        code, out, _ = run_cli(
            capsys, "asympt", "--u0", "9", "--r", "2", "--n-from", "0", "--n-to", "7"
        )
        assert code == 0
        rows = list(csv.DictReader(io.StringIO(out)))
        assert [row["exactness_flag"] for row in rows] == ["false"] * 6 + ["true"] * 2
        assert rows[0]["gap_per_n"] == ""  # undefined at n = 0
        assert rows[-1]["step4"] != ""  # r = 2 is prime

    def test_composite_r_has_empty_step4(self, capsys):
        code, out, _ = run_cli(capsys, "asympt", "--u0", "1", "--r", "4", "--n", "20")
        assert code == 0
        row = next(csv.DictReader(io.StringIO(out)))
        assert row["step4"] == ""
        assert row["step3"] != ""

    def test_r_one_rejected(self, capsys):
        code, _, err = run_cli(capsys, "asympt", "--u0", "1", "--r", "1", "--n", "5")
        assert code == 2
        assert "r >= 2" in err

    def test_exppart_constant_column(self, capsys):
        code, out, _ = run_cli(
            capsys, "asympt", "--u0", "1", "--r", "2", "--n-from", "5", "--n-to", "7"
        )
        rows = list(csv.DictReader(io.StringIO(out)))
        values = {row["exppart_per_n_log"] for row in rows}
        assert len(values) == 1
        assert float(values.pop()) == pytest.approx(math.log(5), abs=1e-9)


class TestCompareCommand:
    def test_advantage_positive_once_applicable(self, capsys):
        code, out, _ = run_cli(
            capsys, "compare", "--u0", "1", "--r", "2", "--n-from", "11", "--n-to", "14"
        )
        assert code == 0
        rows = {row["n"]: row for row in csv.DictReader(io.StringIO(out))}
        assert rows["11"]["log_advantage"] == ""
        assert float(rows["12"]["log_advantage"]) > 0
        assert float(rows["14"]["log_advantage"]) > 0


class TestVerifyCommand:
    def test_filtered_pass(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--quick", "--only", "digit-sum")
        assert code == 0
        assert out.startswith("PASS  digit-sum-identity")

    def test_injected_fault_fails_with_tuple(self, capsys):
        code, out, _ = run_cli(
            capsys, "verify", "--only", "self-test", "--inject-fault"
        )
        assert code == 1
        assert "FAIL  self-test-injected-fault" in out
        assert "(1, 2, 4, 0)" in out

    def test_unknown_filter(self, capsys):
        code, out, _ = run_cli(capsys, "verify", "--only", "no-such-check")
        assert code == 2


class TestOutputPlumbing:
    def test_out_file(self, tmp_path):
        path = tmp_path / "report.csv"
        code = cli.main(
            ["scan", "--u0", "1", "--r", "2", "--n-from", "1", "--n-to", "3", "--out", str(path)]
        )
        assert code == 0
        content = path.read_text(encoding="utf-8")
        assert content.splitlines()[0] == ",".join(cli.SCAN_COLUMNS)

    def test_deterministic_output(self, capsys):
        args = ("scan", "--u0", "5", "--r", "3", "--n-from", "0", "--n-to", "25")
        _, first, _ = run_cli(capsys, *args)
        _, second, _ = run_cli(capsys, *args)
        assert first == second

    def test_sieve_cap_env_override(self, capsys, monkeypatch):
        monkeypatch.setenv("LCMB_SIEVE_CAP", "50")
        code, _, err = run_cli(capsys, "asympt", "--u0", "1", "--r", "2", "--n", "100")
        assert code == 1
        assert "sieve cap" in err

    def test_sieve_cap_flag_beats_env(self, capsys, monkeypatch):
        monkeypatch.setenv("LCMB_SIEVE_CAP", "50")
        code, out, _ = run_cli(
            capsys,
            "asympt", "--u0", "1", "--r", "2", "--n", "100", "--sieve-cap", "1000000",
        )
        assert code == 0
