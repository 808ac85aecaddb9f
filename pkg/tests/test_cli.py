"""End-to-end CLI tests, run in-process through main()."""

import csv
import io
import json
from fractions import Fraction
from pathlib import Path

import pytest

from partsums import exact
from partsums.cli import main

BFILE = Path(__file__).parent / "data" / "b000712_16.txt"


def run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_f_table_text(capsys):
    code, out, err = run(capsys, ["f-table", "--n", "20"])
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].startswith("f-table")
    assert any(line.split()[:3] == ["7", "109", "110"] for line in lines)


def test_f_table_json_serializes_integers_as_strings(capsys):
    code, out, _ = run(capsys, ["f-table", "--n", "20", "--format", "json"])
    assert code == 0
    doc = json.loads(out)
    assert doc["kind"] == "f-table"
    assert doc["parameters"]["n"] == "20"
    assert doc["columns"] == ["j", "f", "pair_count", "match"]
    row7 = doc["rows"][7]
    assert row7 == ["7", "109", "110", False]


def test_f_table_csv(capsys):
    code, out, _ = run(capsys, ["f-table", "--n", "8", "--format", "csv"])
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["j", "f", "pair_count", "match"]
    assert rows[1] == ["0", "1", "1", "True"]
    assert len(rows) == 2 + 8 // 2 + 1


def test_f_table_zero(capsys):
    code, out, _ = run(capsys, ["f-table", "--n", "0", "--format", "json"])
    assert code == 0
    doc = json.loads(out)
    assert doc["rows"] == [["0", "1", "1", True]]


def test_theorem1_pass(capsys):
    code, out, _ = run(capsys, ["theorem1", "--n-max", "40", "--format", "json"])
    assert code == 0
    doc = json.loads(out)
    assert doc["parameters"]["verdict"] == "PASS"
    assert len(doc["rows"]) == 38  # n = 3..40
    assert all(row[3] for row in doc["rows"])


def test_theorem1_rejects_small_range(capsys):
    code, _, err = run(capsys, ["theorem1", "--n-max", "2"])
    assert code == 2
    assert "at least 3" in err


def test_expectation_exact_fraction_roundtrips(capsys):
    code, out, _ = run(
        capsys,
        ["expectation", "--m", "2", "--i", "1", "--n", "300", "--format", "json"],
    )
    assert code == 0
    doc = json.loads(out)
    (row,) = doc["rows"]
    num, den = row[1].split("/")
    assert Fraction(int(num), int(den)) == exact.expected_subsum(300, 2, 1)


def test_expectation_multiple_n(capsys):
    code, out, _ = run(
        capsys,
        ["expectation", "--m", "3", "--i", "3", "--n", "50", "--n", "10",
         "--format", "json"],
    )
    assert code == 0
    doc = json.loads(out)
    assert [row[0] for row in doc["rows"]] == ["10", "50"]


def test_convergence_improves(capsys):
    code, out, _ = run(
        capsys,
        ["convergence", "--m", "2", "--i", "2", "--n-max", "6400",
         "--format", "json"],
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["parameters"]["improving"] is True
    assert [row[0] for row in doc["rows"]] == ["100", "400", "1600", "6400"]


def test_convergence_threads_identical_output(capsys):
    code1, out1, _ = run(
        capsys,
        ["convergence", "--m", "3", "--i", "1", "--n-max", "1600",
         "--format", "json"],
    )
    code2, out2, _ = run(
        capsys,
        ["convergence", "--m", "3", "--i", "1", "--n-max", "1600",
         "--format", "json", "--threads", "4"],
    )
    assert code1 == code2 == 0
    assert out1 == out2


def test_convergence_needs_room_for_a_ladder(capsys):
    code, _, err = run(capsys, ["convergence", "--m", "2", "--i", "1",
                                "--n-max", "300"])
    assert code == 2
    assert "ladder" in err


def test_constants_pass(capsys):
    code, out, _ = run(capsys, ["constants", "--m", "6", "--format", "json"])
    assert code == 0
    doc = json.loads(out)
    assert doc["parameters"]["verdict"] == "PASS"
    labels = [row[0] for row in doc["rows"]]
    assert "gamma[1] roots-of-unity" in labels
    assert "gamma[6] digamma" in labels
    assert "b[3]" in labels and "c[6]" in labels
    assert "gamma_sum" in labels and "max_cross_deviation" in labels


def test_constants_double_precision(capsys):
    code, out, _ = run(
        capsys, ["constants", "--m", "4", "--precision", "double"]
    )
    assert code == 0
    assert "PASS" in out


def test_lambert_within_error_proxy(capsys):
    code, out, _ = run(
        capsys,
        ["lambert", "--alpha", "0.05", "--m", "3", "--h", "2", "--format", "json"],
    )
    assert code == 0
    doc = json.loads(out)
    rows = dict((row[0], row[1]) for row in doc["rows"])
    assert rows["within_2x_last_term"] is True
    assert rows["terms_used"] == "8"
    assert float(rows["abs_difference"]) <= 2 * float(rows["last_term_magnitude"])


def test_lambert_rejects_bad_alpha(capsys):
    code, _, err = run(capsys, ["lambert", "--alpha", "-1", "--m", "1", "--h", "1"])
    assert code == 2
    assert "alpha" in err


def test_bijection_forward(capsys):
    code, out, _ = run(
        capsys, ["bijection", "--partition", "5,4,2,1", "--format", "json"]
    )
    assert code == 0
    doc = json.loads(out)
    rows = dict((row[0], row[1]) for row in doc["rows"])
    assert rows["alpha"] == "(2,1,1)"
    assert rows["beta"] == "(1)"
    assert rows["j"] == "5"
    assert rows["roundtrip_ok"] is True


def test_bijection_inverse(capsys):
    code, out, _ = run(
        capsys,
        ["bijection", "--alpha", "2,1", "--beta", "1", "--n", "12",
         "--format", "json"],
    )
    assert code == 0
    doc = json.loads(out)
    rows = dict((row[0], row[1]) for row in doc["rows"])
    assert rows["partition"] == "(6,3,2,1)"


def test_bijection_empty_pair(capsys):
    code, out, _ = run(
        capsys,
        ["bijection", "--alpha", "", "--beta", "", "--n", "7", "--format", "json"],
    )
    assert code == 0
    doc = json.loads(out)
    rows = dict((row[0], row[1]) for row in doc["rows"])
    assert rows["partition"] == "(7)"


def test_bijection_no_preimage_is_usage_error(capsys):
    code, _, err = run(
        capsys, ["bijection", "--alpha", "3", "--beta", "3", "--n", "10"]
    )
    assert code == 2
    assert "exceeds" in err


def test_bijection_inverse_needs_all_pieces(capsys):
    code, _, err = run(capsys, ["bijection", "--alpha", "2,1"])
    assert code == 2


def test_bijection_bad_partition_text(capsys):
    code, _, err = run(capsys, ["bijection", "--partition", "2,x"])
    assert code == 2
    assert "parse" in err


def test_oeis_check_reference_file(capsys):
    code, out, _ = run(
        capsys, ["oeis-check", "--bfile", str(BFILE), "--format", "json"]
    )
    assert code == 0
    doc = json.loads(out)
    rows = dict((row[0], row[1]) for row in doc["rows"])
    assert rows["verdict"] == "PASS"
    assert rows["entries_checked"] == "16"
    assert rows["first_mismatch_index"] == "none"


def test_oeis_check_partial_count(capsys):
    code, out, _ = run(
        capsys,
        ["oeis-check", "--bfile", str(BFILE), "--count", "5", "--format", "json"],
    )
    assert code == 0
    doc = json.loads(out)
    rows = dict((row[0], row[1]) for row in doc["rows"])
    assert rows["entries_checked"] == "5"


def test_oeis_check_overlong_count_warns_in_parameters(capsys):
    code, out, _ = run(
        capsys,
        ["oeis-check", "--bfile", str(BFILE), "--count", "99", "--format", "json"],
    )
    assert code == 0
    doc = json.loads(out)
    assert "warning" in doc["parameters"]
    rows = dict((row[0], row[1]) for row in doc["rows"])
    assert rows["entries_checked"] == "16"


def test_oeis_check_detects_mismatch(tmp_path, capsys):
    bad = tmp_path / "b.txt"
    bad.write_text("0 1\n1 2\n2 5\n3 11\n")
    code, out, _ = run(capsys, ["oeis-check", "--bfile", str(bad), "--format", "json"])
    assert code == 1
    doc = json.loads(out)
    rows = dict((row[0], row[1]) for row in doc["rows"])
    assert rows["verdict"] == "FAIL"
    assert rows["first_mismatch_index"] == "3"


def test_oeis_check_rejects_malformed_files(tmp_path, capsys):
    cases = ["0 1\n2 5\n", "0 1\nxyz 4\n", "", "0 1 2\n"]
    for text in cases:
        bad = tmp_path / "bad.txt"
        bad.write_text(text)
        code, _, err = run(capsys, ["oeis-check", "--bfile", str(bad)])
        assert code == 2, text
        assert err.startswith("error:")
    code, _, err = run(capsys, ["oeis-check", "--bfile", str(tmp_path / "nope.txt")])
    assert code == 2


def test_cache_dir_roundtrip(tmp_path, capsys):
    cache = tmp_path / "cache"
    argv = ["expectation", "--m", "2", "--i", "1", "--n", "400",
            "--cache-dir", str(cache), "--format", "json"]
    code1, out1, _ = run(capsys, argv)
    assert code1 == 0
    assert (cache / "p-table-400.txt").exists()
    assert (cache / "divisors-k400-m2-i1.txt").exists()
    code2, out2, _ = run(capsys, argv)
    assert code2 == 0
    assert out1 == out2


def test_cache_dir_rejects_corrupt_table(tmp_path, capsys):
    cache = tmp_path / "cache"
    cache.mkdir()
    (cache / "p-table-200.txt").write_text("garbage\n")
    code, _, err = run(
        capsys,
        ["expectation", "--m", "2", "--i", "1", "--n", "200",
         "--cache-dir", str(cache)],
    )
    assert code == 2
    assert "p-table" in err


def test_usage_errors_exit_2(capsys):
    assert run(capsys, [])[0] == 2
    assert run(capsys, ["f-table"])[0] == 2
    assert run(capsys, ["f-table", "--n", "-3"])[0] == 2
    assert run(capsys, ["f-table", "--n", "5", "--format", "yaml"])[0] == 2
    assert run(capsys, ["f-table", "--n", "5", "--threads", "0"])[0] == 2


def test_help_exits_cleanly(capsys):
    assert run(capsys, ["--help"])[0] == 0
    assert run(capsys, ["lambert", "--help"])[0] == 0
