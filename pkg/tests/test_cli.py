import io
import json
import subprocess
import sys

import pytest

from braidquot.cli import main


def run(capsys, *argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def b4s2q3(tmp_path, capsys):
    code, out, _ = run(capsys, "build", "sphere_braid", "n=4", "q=3")
    assert code == 0
    path = tmp_path / "b4s2q3.json"
    path.write_text(out)
    return str(path)


def test_build_examples(capsys):
    code, out, _ = run(capsys, "build", "artin_braid", "n=3")
    js = json.loads(out)
    assert code == 0 and len(js["generators"]) == 2 and len(js["relators"]) == 1
    _, out, _ = run(capsys, "build", "sphere_braid", "n=2")
    assert json.loads(out)["relators"] == [[1, 1]]
    _, out, _ = run(capsys, "build", "triangle", "l=2", "m=3", "n=5")
    js = json.loads(out)
    assert len(js["generators"]) == 2 and len(js["relators"]) == 3


@pytest.mark.parametrize("argv", [
    ["build", "nonexistent"], ["build", "artin_braid", "n"], ["build", "artin_braid", "n=x"],
    ["build", "artin_braid", "k=3"], ["build", "artin_braid", "n=1"], ["frobnicate"],
])
def test_build_errors_exit_1(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 1 and err


def test_order(capsys, b4s2q3):
    code, out, _ = run(capsys, "order", b4s2q3)
    assert (code, out) == (0, "12\n")
    code, out, _ = run(capsys, "order", b4s2q3, "--json", "--strategy", "felsch")
    assert code == 0 and json.loads(out)["index"] == 12


def test_order_inconclusive_exit_2(capsys, tmp_path):
    path = tmp_path / "q6.json"
    main(["build", "sphere_braid", "n=4", "q=6"])
    path.write_text(capsys.readouterr().out)
    code, out, _ = run(capsys, "order", str(path), "--max-cosets", "20000")
    assert (code, out) == (2, "INCONCLUSIVE\n")


def test_order_from_stdin(capsys, monkeypatch):
    main(["build", "sphere_braid", "n=3"])
    text = capsys.readouterr().out
    code, out, _ = run(capsys, "order", "-", stdin=text, monkeypatch=monkeypatch)
    assert (code, out) == (0, "12\n")


@pytest.mark.parametrize("text", ["{not json", '{"generators": ["a"], "relators": [[3]]}'])
def test_malformed_input_exit_1(capsys, monkeypatch, text):
    code, _, err = run(capsys, "order", "-", stdin=text, monkeypatch=monkeypatch)
    assert code == 1 and "error" in err


def test_missing_file_exit_1(capsys, tmp_path):
    code, _, err = run(capsys, "abelian", str(tmp_path / "nope.json"))
    assert code == 1 and err


@pytest.mark.parametrize("build, expected", [
    (["sphere_braid", "n=3", "q=3"], {"free_rank": 0, "torsion": []}),
    (["nonorientable_abelianized", "g=2", "q=4"], {"free_rank": 1, "torsion": [2, 2]}),
    (["artin_braid", "n=4"], {"free_rank": 1, "torsion": []}),
])
def test_abelian(capsys, monkeypatch, build, expected):
    main(["build", *build])
    text = capsys.readouterr().out
    code, out, _ = run(capsys, "abelian", stdin=text, monkeypatch=monkeypatch)
    assert code == 0 and json.loads(out) == expected


def test_identify(capsys, b4s2q3):
    code, out, _ = run(capsys, "identify", b4s2q3)
    js = json.loads(out)
    assert code == 0 and js["order"] == 12 and js["identified_name"] == "A4"


def test_identify_inconclusive(capsys, monkeypatch):
    main(["build", "artin_braid", "n=3"])
    text = capsys.readouterr().out
    code, out, _ = run(capsys, "identify", "--max-cosets", "300", stdin=text, monkeypatch=monkeypatch)
    assert code == 2 and json.loads(out)["order"] == "inconclusive"


def test_env_var_sets_default_cap(capsys, monkeypatch, tmp_path):
    monkeypatch.setenv("BRAIDQUOT_MAX_COSETS", "50")
    main(["build", "artin_braid", "n=3", "q=5"])
    path = tmp_path / "b3q5.json"
    path.write_text(capsys.readouterr().out)
    code, out, _ = run(capsys, "order", str(path))
    assert (code, out) == (2, "INCONCLUSIVE\n")
    code, out, _ = run(capsys, "order", str(path), "--max-cosets", "5000")
    assert (code, out) == (0, "600\n")


def test_paper_suite_subset_json(capsys):
    code, out, _ = run(capsys, "paper-suite", "--only", "04-sphere3")
    js = json.loads(out)
    assert code == 0
    assert js["summary"] == {"pass": len(js["records"]), "fail": 0, "inconclusive": 0}
    ids = [r["claim_id"] for r in js["records"]]
    assert ids == sorted(ids)
    for r in js["records"]:
        assert r["paper_anchor"] and r["status"] == "pass" and r["expected"] == r["observed"]
        assert r["runtime_ms"] is None


def test_paper_suite_markdown(capsys):
    code, out, _ = run(capsys, "paper-suite", "--only", "03-sphere2", "--format", "markdown")
    rows = [line for line in out.splitlines() if line.startswith("| 03-")]
    assert code == 0 and len(rows) == 4
    assert out.startswith("| claim |")


def test_paper_suite_timings(capsys):
    _, out, _ = run(capsys, "paper-suite", "--only", "03-sphere2/q=3", "--timings")
    assert isinstance(json.loads(out)["records"][0]["runtime_ms"], int)


def test_paper_suite_tiny_cap(capsys):
    code, out, _ = run(capsys, "paper-suite", "--only", "01-platonic", "--max-cosets", "100")
    js = json.loads(out)
    by_id = {r["claim_id"]: r for r in js["records"]}
    assert by_id["01-platonic/B5(3)/order"]["status"] == "inconclusive"
    assert by_id["01-platonic/B5(3)/formula"]["status"] == "pass"
    assert js["summary"]["fail"] == 0 and code == 2


def test_output_is_byte_identical_across_runs():
    cmd = [sys.executable, "-m", "braidquot", "paper-suite", "--only", "05-sphere4/q=3"]
    a = subprocess.run(cmd, capture_output=True, check=False)
    b = subprocess.run(cmd, capture_output=True, check=False)
    assert a.returncode == b.returncode == 0
    assert a.stdout == b.stdout and a.stdout
