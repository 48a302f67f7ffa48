import subprocess
import sys

import numpy as np
import pytest

from semiheyting import enumerate_tables, heyting_table, parse, serialize
from semiheyting.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestCount:
    @pytest.mark.parametrize(
        "method,n,expected",
        [
            ("recursive", 7, "6635012800"),
            ("recursive", 1, "1"),
            ("product", 7, "6635012800"),
            ("construct", 3, "10"),
            ("oracle-pure", 3, "10"),
            ("oracle-forced", 4, "160"),
            ("oracle-forced", 5, "10400"),
        ],
    )
    def test_methods(self, capsys, method, n, expected):
        code, out, _ = run(capsys, "count", "--n", str(n), "--method", method)
        assert code == 0
        assert out == expected + "\n"

    def test_plain_decimal_no_separators(self, capsys):
        code, out, _ = run(capsys, "count", "--n", "12", "--method", "recursive")
        assert code == 0
        assert out.strip().isdigit()

    def test_huge_n_formula(self, capsys):
        code, out, _ = run(capsys, "count", "--n", "200", "--method", "product")
        assert code == 0
        assert out.strip().isdigit()
        assert len(out.strip()) > 4300

    def test_over_cap_oracle(self, capsys):
        code, _, err = run(capsys, "count", "--n", "4", "--method", "oracle-pure")
        assert code == 2
        assert "cap" in err and "recursive" in err

    def test_over_cap_construct(self, capsys):
        code, _, err = run(
            capsys, "count", "--n", "3", "--method", "construct", "--max-construct", "2"
        )
        assert code == 2
        assert "n<=2" in err

    def test_cap_override(self, capsys):
        code, out, _ = run(
            capsys, "count", "--n", "4", "--method", "construct", "--max-construct", "4"
        )
        assert code == 0
        assert out == "160\n"

    def test_bad_n(self, capsys):
        code, _, err = run(capsys, "count", "--n", "0")
        assert code == 2


class TestEnumerate:
    def test_text_stream(self, capsys):
        code, out, _ = run(capsys, "enumerate", "--n", "3")
        assert code == 0
        docs = out.split("\n\n")
        assert len(docs) == 10
        tables = [parse(doc if doc.endswith("\n") else doc + "\n") for doc in docs]
        expected = list(enumerate_tables(3))
        for got, want in zip(tables, expected):
            assert np.array_equal(got, want)

    def test_limit_one_golden(self, capsys):
        code, out, _ = run(capsys, "enumerate", "--n", "3", "--limit", "1")
        assert code == 0
        assert out == "shht 1\nn=3\n2 0 0\n0 2 1\n0 1 2\n"

    def test_json_lines(self, capsys):
        code, out, _ = run(capsys, "enumerate", "--n", "2", "--format", "json")
        assert code == 0
        lines = out.strip().split("\n")
        assert len(lines) == 2
        got = [parse(line, "json").tolist() for line in lines]
        assert got == [[[1, 0], [0, 1]], [[1, 1], [0, 1]]]

    def test_out_file(self, tmp_path, capsys):
        target = tmp_path / "tables.shht"
        code, _, _ = run(capsys, "enumerate", "--n", "2", "--out", str(target))
        assert code == 0
        assert target.read_bytes() == b"shht 1\nn=2\n1 0\n0 1\n\nshht 1\nn=2\n1 1\n0 1\n"

    def test_unwritable_destination(self, capsys):
        code, _, err = run(
            capsys, "enumerate", "--n", "2", "--out", "/nonexistent/dir/x.shht"
        )
        assert code == 2
        assert "cannot write" in err

    def test_limit_zero(self, capsys):
        code, out, _ = run(capsys, "enumerate", "--n", "3", "--limit", "0")
        assert code == 0
        assert out == ""


class TestVerify:
    def write(self, tmp_path, data):
        p = tmp_path / "table.shht"
        p.write_bytes(data)
        return str(p)

    def test_godel4_valid_heyting(self, tmp_path, capsys):
        path = self.write(tmp_path, serialize(heyting_table(4)))
        code, out, _ = run(capsys, "verify", path)
        assert code == 0
        assert out == "VALID heyting=yes\n"

    def test_valid_non_heyting(self, tmp_path, capsys):
        path = self.write(tmp_path, serialize([[1, 0], [0, 1]]))
        code, out, _ = run(capsys, "verify", path)
        assert code == 0
        assert out == "VALID heyting=no\n"

    def test_sh2_failure_report(self, tmp_path, capsys):
        path = self.write(tmp_path, serialize([[1, 1], [1, 1]]))
        code, out, _ = run(capsys, "verify", path)
        assert code == 1
        assert out == "SH2 fails at x=a1,y=a0\n"

    def test_truncated_file(self, tmp_path, capsys):
        path = self.write(tmp_path, b"shht 1\nn=2\n1 1\n")
        code, _, err = run(capsys, "verify", path)
        assert code == 2
        assert "end of input" in err

    def test_out_of_range_cell(self, tmp_path, capsys):
        path = self.write(tmp_path, b"shht 1\nn=2\n1 2\n0 1\n")
        code, _, err = run(capsys, "verify", path)
        assert code == 2
        assert "cell (0,1)" in err

    def test_missing_file(self, capsys):
        code, _, err = run(capsys, "verify", "/no/such/file")
        assert code == 2

    def test_json_document(self, tmp_path, capsys):
        path = self.write(tmp_path, serialize(heyting_table(3), "json"))
        code, out, _ = run(capsys, "verify", path)
        assert code == 0
        assert out == "VALID heyting=yes\n"


class TestCrosscheckCommand:
    def test_default_run_passes(self, capsys):
        code, out, _ = run(capsys, "crosscheck")
        assert code == 0
        assert "0 failed" in out

    def test_small_caps_pass(self, capsys):
        code, out, _ = run(
            capsys,
            "crosscheck",
            "--max-pure", "2",
            "--max-forced", "3",
            "--max-construct", "4",
            "--max-formula", "30",
        )
        assert code == 0
        lines = out.strip().split("\n")
        assert all(l.startswith("PASS") for l in lines if l.startswith(("PASS", "FAIL")))
        assert "0 failed" in lines[-1]

    def test_bad_cap(self, capsys):
        code, _, err = run(capsys, "crosscheck", "--max-formula", "0")
        assert code == 2


class TestModuleEntryPoint:
    def test_python_dash_m(self):
        out = subprocess.run(
            [sys.executable, "-m", "semiheyting", "count", "--n", "5"],
            capture_output=True,
            text=True,
        )
        assert out.returncode == 0
        assert out.stdout.strip() == "10400"

    def test_verify_exit_codes_via_module(self, tmp_path):
        bad = tmp_path / "bad.shht"
        bad.write_bytes(b"shht 1\nn=2\n1 1\n1 1\n")
        out = subprocess.run(
            [sys.executable, "-m", "semiheyting", "verify", str(bad)],
            capture_output=True,
            text=True,
        )
        assert out.returncode == 1
        assert "SH2" in out.stdout
