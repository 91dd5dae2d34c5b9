import io
import json

import pytest

from app import main
from config.constants import EXIT_CLAIM_FAILS, EXIT_OK, EXIT_USAGE


def write_complex(tmp_path, name, n, facets):
    path = tmp_path / name
    path.write_text(json.dumps({"n": n, "facets": facets}), encoding="utf-8")
    return str(path)


def cycle_facets(n):
    return [[i, (i + 1) % n] for i in range(n)]


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    for name in ("COTAN_JOBS", "COTAN_FIELD", "COTAN_LOG_LEVEL"):
        monkeypatch.delenv(name, raising=False)


# =========================
# t2
# =========================
def test_pentagon_vanishes(tmp_path, capsys):
    path = write_complex(tmp_path, "pentagon.json", 5, cycle_facets(5))
    assert main(["t2", path]) == EXIT_OK
    out = capsys.readouterr().out.splitlines()
    assert out == ["field: Q", "VANISHES"]


def test_seven_cycle_prints_witness(tmp_path, capsys):
    path = write_complex(tmp_path, "c7.json", 7, cycle_facets(7))
    assert main(["t2", path, "--witness"]) == EXIT_CLAIM_FAILS
    out = capsys.readouterr().out
    assert "dimT2=" in out
    assert "Ntilde_b" in out


def test_t2_json_output(tmp_path, capsys):
    path = write_complex(tmp_path, "c7.json", 7, cycle_facets(7))
    assert main(["t2", path, "--json"]) == EXIT_CLAIM_FAILS
    payload = json.loads(capsys.readouterr().out)
    assert payload["field"] == "Q"
    assert payload["vanishes"] is False
    assert payload["dimT2"] >= 1


def test_t2_reads_stdin(monkeypatch, capsys):
    monkeypatch.setattr("sys.stdin", io.StringIO(json.dumps({"n": 4, "facets": cycle_facets(4)})))
    assert main(["t2", "-"]) == EXIT_OK
    assert "VANISHES" in capsys.readouterr().out


def test_disconnected_complex_is_obstructed_across_components(tmp_path, capsys):
    # 成分 {0,1,2,3} と {4,5}、6 はループ
    path = write_complex(tmp_path, "split.json", 7, [[1, 3], [4, 5], [0, 1, 2]])
    assert main(["t2", path, "--witness"]) == EXIT_CLAIM_FAILS
    witness = capsys.readouterr().out.splitlines()[1]
    fields = dict(token.split("=", 1) for token in witness.split())
    assert fields["A"] == "{}"
    assert int(fields["dimT2"]) >= 1

    assert main(["t2-graded", path]) == EXIT_OK
    rows = {(row[0], row[1]): int(row[3]) for row in
            (line.split() for line in capsys.readouterr().out.splitlines()[2:])}
    for u in (0, 1, 2, 3):
        for v in (4, 5):
            assert rows.get(("{}", f"{{{u},{v}}}"), 0) >= 1, (u, v)


def test_malformed_json(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text("{not json", encoding="utf-8")
    assert main(["t2", str(path)]) == EXIT_USAGE
    assert "invalid JSON" in capsys.readouterr().err


def test_invalid_vertex(tmp_path, capsys):
    path = write_complex(tmp_path, "bad.json", 2, [[0, 5]])
    assert main(["t2", path]) == EXIT_USAGE
    assert "invalid vertex" in capsys.readouterr().err


def test_void_input_is_rejected(tmp_path, capsys):
    path = write_complex(tmp_path, "void.json", 3, [])
    assert main(["t2", path]) == EXIT_USAGE
    assert "void" in capsys.readouterr().err


def test_field_option_and_environment(tmp_path, capsys, monkeypatch):
    path = write_complex(tmp_path, "pentagon.json", 5, cycle_facets(5))
    assert main(["t2", path, "--field", "gf2"]) == EXIT_OK
    assert capsys.readouterr().out.startswith("field: GF(2)")
    monkeypatch.setenv("COTAN_FIELD", "gf3")
    assert main(["t2", path]) == EXIT_OK
    assert capsys.readouterr().out.startswith("field: GF(3)")


def test_bad_field_and_jobs(tmp_path, monkeypatch):
    path = write_complex(tmp_path, "pentagon.json", 5, cycle_facets(5))
    assert main(["t2", path, "--field", "gf4"]) == EXIT_USAGE
    monkeypatch.setenv("COTAN_JOBS", "0")
    assert main(["t2", path]) == EXIT_USAGE


def test_unknown_command_exits_with_usage():
    with pytest.raises(SystemExit) as info:
        main(["frobnicate"])
    assert info.value.code == EXIT_USAGE


# =========================
# t2-graded
# =========================
def test_graded_rows_of_five_points(tmp_path, capsys):
    path = write_complex(tmp_path, "points.json", 5, [[i] for i in range(5)])
    assert main(["t2-graded", path]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "field: Q"
    assert lines[1].split() == ["A", "b", "dimT1", "dimT2"]
    rows = [line.split() for line in lines[2:]]
    assert len(rows) == 10
    assert all(row[0] == "{}" and row[3] == "2" for row in rows)


def test_graded_json_of_simplex(tmp_path, capsys):
    path = write_complex(tmp_path, "simplex.json", 3, [[0, 1, 2]])
    assert main(["t2-graded", path, "--json", "--include-t1"]) == EXIT_OK
    assert json.loads(capsys.readouterr().out)["rows"] == []


# =========================
# 検証系のサブコマンド
# =========================
def test_uniform_table(capsys):
    assert main(["uniform-table", "--max-n", "4"]) == EXIT_OK
    assert "summary: PASS" in capsys.readouterr().out


def test_uniform_table_bound(capsys):
    assert main(["uniform-table", "--max-n", "12"]) == EXIT_USAGE


def test_corank2_verify(capsys):
    assert main(["corank2-verify", "--max-n", "4", "--jobs", "1"]) == EXIT_OK
    assert "summary: PASS" in capsys.readouterr().out


def test_conjecture_check_database(tmp_path, capsys):
    db = tmp_path / "matroids.txt"
    db.write_text("# small matroids\n# n=4 r=2\n******\n*****0\n\n# n=3 r=1\n***\n", encoding="utf-8")
    assert main(["conjecture-check", "--db", str(db), "--jobs", "1"]) == EXIT_OK
    assert "checked 3 matroids: 3 agree" in capsys.readouterr().out


def test_conjecture_check_database_errors(tmp_path, capsys):
    before_header = tmp_path / "a.txt"
    before_header.write_text("******\n", encoding="utf-8")
    assert main(["conjecture-check", "--db", str(before_header), "--jobs", "1"]) == EXIT_USAGE
    assert "line 1" in capsys.readouterr().err

    bad_exchange = tmp_path / "b.txt"
    bad_exchange.write_text("# n=4 r=2\n*0*00*\n", encoding="utf-8")
    assert main(["conjecture-check", "--db", str(bad_exchange), "--jobs", "1"]) == EXIT_USAGE
    assert "line 2" in capsys.readouterr().err


def test_conjecture_check_needs_one_source(capsys):
    assert main(["conjecture-check"]) == EXIT_USAGE


def test_conjecture_check_enumerate(capsys):
    assert main(["conjecture-check", "--enumerate", "--max-n", "3", "--jobs", "1"]) == EXIT_OK
    assert "checked 14 matroids" in capsys.readouterr().out


def test_join_check(tmp_path, capsys):
    first = write_complex(tmp_path, "a.json", 2, [[0], [1]])
    second = write_complex(tmp_path, "b.json", 2, [[0], [1]])
    assert main(["join-check", first, second]) == EXIT_OK
    assert capsys.readouterr().out.rstrip().endswith("PASS")


def test_classify_writes_then_matches_golden(tmp_path, capsys):
    golden = str(tmp_path / "golden.txt")
    args = ["classify-1d", "--max-n", "4", "--golden", golden, "--jobs", "1"]
    assert main(args + ["--write-golden"]) == EXIT_OK
    assert "golden: written" in capsys.readouterr().out
    assert main(args) == EXIT_OK
    assert "golden: match" in capsys.readouterr().out


def test_classify_missing_golden_is_an_error(tmp_path, capsys):
    golden = tmp_path / "missing.txt"
    assert main(["classify-1d", "--max-n", "3", "--golden", str(golden), "--jobs", "1"]) == EXIT_USAGE
    assert "golden file not found" in capsys.readouterr().err
    assert not golden.exists()


def test_classify_against_bundled_golden(capsys):
    assert main(["classify-1d", "--max-n", "5", "--jobs", "1"]) == EXIT_OK
    out = capsys.readouterr().out.splitlines()
    assert "golden: match" in out
    assert out[-1] == "15 classes"


def test_classify_reports_golden_differences(tmp_path, capsys):
    golden = tmp_path / "golden.txt"
    golden.write_text("n=2 edges=1 matroid=yes edgelist=0-1\n", encoding="utf-8")
    assert main(["classify-1d", "--max-n", "3", "--golden", str(golden), "--jobs", "1"]) == EXIT_CLAIM_FAILS
    captured = capsys.readouterr()
    assert "golden: differs" in captured.out
    assert "+n=3 edges=1 matroid=no" in captured.err


def test_classify_malformed_golden(tmp_path, capsys):
    golden = tmp_path / "golden.txt"
    golden.write_text("# header\nn=2 edges=1\n", encoding="utf-8")
    assert main(["classify-1d", "--max-n", "3", "--golden", str(golden), "--jobs", "1"]) == EXIT_USAGE
    assert "line 2" in capsys.readouterr().err


def test_classify_rejects_large_bound(capsys):
    assert main(["classify-1d", "--max-n", "9", "--jobs", "1"]) == EXIT_USAGE
