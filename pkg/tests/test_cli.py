import csv
import io
import json

import pytest

from classical_schubert import cli, poly, verify
from classical_schubert.verify import golden_double


@pytest.fixture(autouse=True)
def cache_home(tmp_path, monkeypatch):
    monkeypatch.setenv(cli.CACHE_ENV, str(tmp_path / "cache"))
    return tmp_path / "cache"


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


B2_DOUBLE = ("table", "--type", "B", "--rank", "2", "--kind", "first", "--arity", "double")


def test_table_b2_double_json(capsys):
    code, out, _ = run(capsys, *B2_DOUBLE, "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert len(doc["rows"]) == 8
    assert [r["length"] for r in doc["rows"]] == sorted(r["length"] for r in doc["rows"])
    gold = golden_double()
    by_word = {r["word"]: poly.parse(r["polynomial"]) for r in doc["rows"]}
    for word, f in gold.items():
        assert by_word[",".join(map(str, word))] == f


def test_table_type_a_longest_row(capsys):
    code, out, _ = run(capsys, "table", "--type", "A", "--rank", "3", "--format", "json")
    rows = json.loads(out)["rows"]
    assert code == 0 and len(rows) == 6
    assert rows[-1]["polynomial"] == "x1^2*x2"


def test_table_third_kind_nonnegative(capsys):
    code, out, _ = run(capsys, "table", "--type", "C", "--rank", "2", "--kind", "third", "--format", "csv")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert list(rows[0]) == ["word", "window", "length", "polynomial"]
    for r in rows:
        assert all(c >= 0 and c.q == 1 for c in poly.parse(r["polynomial"]).coeffs())


def test_cache_hit_matches_fresh(capsys, cache_home, tmp_path):
    first = run(capsys, *B2_DOUBLE, "--format", "json")
    assert len(list(cache_home.glob("*.json"))) == 1
    second = run(capsys, *B2_DOUBLE, "--format", "json")
    fresh = run(capsys, *B2_DOUBLE, "--format", "json", "--no-cache")
    assert first == second == fresh
    spec = cli.ExpressionSpec(cli.weyl.GroupType("B", 2), arity="double")
    rows, hit = cli.cached_rows(spec, "keep", cache_home)
    assert hit
    assert [cli.row_value(r) for r in rows] == [cli.row_value(r) for r in cli.compute_rows(spec)]


def test_output_file_is_byte_identical(capsys, tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    assert run(capsys, *B2_DOUBLE, "--format", "csv", "--output", str(a))[0] == 0
    assert run(capsys, *B2_DOUBLE, "--format", "csv", "--output", str(b), "--no-cache")[0] == 0
    assert a.read_bytes() == b.read_bytes()


def test_usage_errors(capsys, monkeypatch):
    assert run(capsys, "verify", "--suite", "nonexistent")[0] == 2
    assert run(capsys, "table", "--type", "A", "--rank", "3", "--kind", "second")[0] == 2
    assert run(capsys, "table", "--type", "Q", "--rank", "3")[0] == 2
    assert run(capsys, "eval", "--type", "B", "--rank", "2", "--element", "1,x")[0] == 2
    monkeypatch.setattr(cli, "ROW_LIMIT", 10)
    assert run(capsys, "table", "--type", "B", "--rank", "3")[0] == 2
    assert run(capsys, "table", "--type", "B", "--rank", "3", "--force", "--no-cache")[0] == 0


def test_io_error(capsys, tmp_path):
    blocker = tmp_path / "file"
    blocker.write_text("")
    code, _, err = run(capsys, *B2_DOUBLE, "--cache-dir", str(blocker / "sub"))
    assert code == 3 and "error" in err


def test_missing_family_exits_with_failure(capsys):
    code, _, err = run(capsys, "table", "--type", "B", "--rank", "2", "--flavor", "grothendieck", "--kind", "second")
    assert code == 1 and "character" in err


def test_verify_exit_code_follows_reports(capsys, tmp_path):
    report = tmp_path / "report.jsonl"
    code, out, _ = run(capsys, "verify", "--suite", "golden_double", "--suite", "cauchy_W", "--output", str(report))
    assert code == 0
    lines = [json.loads(line) for line in report.read_text().splitlines()]
    assert [r["status"] for r in lines] == ["pass", "reported"]
    code, out, _ = run(capsys, "verify", "--suite", "vanishing_bruhat", "--format", "json")
    assert code == 1 and json.loads(out)["status"] == "fail"
    code, _, _ = run(capsys, "verify", "--suite", "vanishing_bruhat", "--param", "orientation=reversed", "--param", "action=inverse")
    assert code == 0


def test_verify_all_b2(capsys):
    code, out, _ = run(capsys, "verify", "--all", "--type", "B", "--rank", "2", "--format", "json")
    reports = [json.loads(line) for line in out.splitlines()]
    assert {r["suite_id"] for r in reports} == set(verify.catalog())
    assert code == (1 if any(r["status"] == "fail" for r in reports) else 0)


def test_verify_list(capsys):
    code, out, _ = run(capsys, "verify", "--list")
    assert code == 0
    assert [line.split()[0] for line in out.splitlines()] == verify.catalog()


def test_eval_examples(capsys):
    base = ("eval", "--type", "B", "--rank", "2")
    assert run(capsys, *base, "--element", "1,2")[1] == "1\n"
    groth = run(capsys, *base, "--flavor", "grothendieck", "--element=-2,-1", "--beta", "zero")[1]
    assert groth == run(capsys, *base, "--element=-2,-1")[1]
    # y_i = -x_{v(i)} with v = id kills every coefficient but the identity one
    second = (*base, "--kind", "second", "--arity", "double")
    assert run(capsys, *second, "--element=-1,2", "--vanish", "1,2")[1] == "0\n"
    assert run(capsys, *second, "--element", "1,2", "--vanish", "1,2")[1] == "1\n"
    assert run(capsys, *base, "--element", "2,1", "--set", "x1=0", "--set", "x2=1")[1] == "2\n"


def test_export(capsys, tmp_path):
    target = tmp_path / "c2.json"
    code, _, _ = run(capsys, "export", "--type", "C", "--rank", "2", "--kind", "third", "--output", str(target), "--max-length", "2")
    doc = json.loads(target.read_text())
    assert code == 0
    assert doc["terms"][0]["polynomial"] == "1"
    assert max(t["length"] for t in doc["terms"]) == 2
