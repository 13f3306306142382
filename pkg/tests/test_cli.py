import io
import json
import subprocess
import sys

import pytest

from conftest import GOLDEN
from oracles import end_to_end
from teamrec.cli import EXIT_NOT_FOUND, EXIT_USAGE, main
from teamrec.corpus import parse_corpus_file
from teamrec.model import prepare
from teamrec.roles import RoleCriterion, classify


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


@pytest.fixture
def snap(tmp_path):
    path = tmp_path / "golden.json"
    code, out = run("build", "--input", str(GOLDEN), "--snapshot", str(path))
    assert code == 0
    return path


def test_build_reports_counts(tmp_path):
    path = tmp_path / "s.json"
    code, out = run("build", "--input", str(GOLDEN), "--snapshot", str(path))
    assert code == 0
    assert out.splitlines() == ["papers: 5", "authors: 7", "edges: 8"]
    assert path.exists()


def test_build_empty_file(tmp_path):
    src = tmp_path / "empty.txt"
    src.write_text("")
    path = tmp_path / "s.json"
    code, out = run("build", "--input", str(src), "--snapshot", str(path))
    assert code == 0
    assert out.splitlines() == ["papers: 0", "authors: 0", "edges: 0"]
    code, out = run("stats", "--snapshot", str(path))
    assert code == 0
    assert out.splitlines() == ["papers: 0", "authors: 0", "edges: 0", "criterion: paper (t1=20, t2=40)",
                                "prime: 0", "assistant: 0", "student: 0"]


def test_build_warnings_on_stderr(tmp_path, capsys):
    src = tmp_path / "w.txt"
    src.write_text("#*T\n#@A\n#bogus\n#index1\n")
    code, _ = run("build", "--input", str(src), "--snapshot", str(tmp_path / "s.json"))
    assert code == 0
    assert "1 parse warning" in capsys.readouterr().err


def test_build_missing_input(tmp_path):
    code, _ = run("build", "--input", str(tmp_path / "nope.txt"), "--snapshot", str(tmp_path / "s.json"))
    assert code == 1


def test_stats_golden(snap):
    code, out = run("stats", "--snapshot", str(snap), "--criterion", "citation", "--t1", "1", "--t2", "3")
    assert code == 0
    assert out.splitlines() == ["papers: 5", "authors: 7", "edges: 8", "criterion: citation (t1=1, t2=3)",
                                "prime: 2", "assistant: 3", "student: 2"]
    code, out = run("stats", "--snapshot", str(snap))
    hist = dict(line.split(": ") for line in out.splitlines()[4:])
    assert sum(int(v) for v in hist.values()) == 7


def test_recommend_json_matches_oracle(snap):
    code, out = run("recommend", "--snapshot", str(snap), "--name", "Alice Smith", "--query", "network",
                    "-k", "2", "--criterion", "citation", "--t1", "1", "--t2", "3")
    assert code == 0
    got = json.loads(out)
    assert list(got) == ["seed", "query", "interest", "k", "fallback_used", "pairs"]
    assert got["query"] == "network" and got["interest"] is None and got["k"] == 2
    expected = end_to_end(GOLDEN, "Alice Smith", "network", 2, "citation", 1, 3)
    assert got["seed"] == expected["seed"]
    assert [[m["name"] for m in p["members"]] for p in got["pairs"]] == \
        [[m["name"] for m in p["members"]] for p in expected["pairs"]]
    for gp, ep in zip(got["pairs"], expected["pairs"]):
        assert list(gp) == ["rank", "members"]
        for gm, em in zip(gp["members"], ep["members"]):
            assert list(gm) == ["name", "role", "i1", "i2", "f"]
            assert gm["f"] == pytest.approx(em["f"], abs=1e-12)


def test_recommend_no_candidates(tmp_path):
    src = tmp_path / "solo.txt"
    src.write_text("#*Alone\n#@Solo Author\n#index1\n")
    path = tmp_path / "s.json"
    assert run("build", "--input", str(src), "--snapshot", str(path))[0] == 0
    code, out = run("recommend", "--snapshot", str(path), "--name", "Solo Author", "--query", "x", "-k", "1")
    assert code == 0
    assert json.loads(out)["pairs"] == []


def test_recommend_table(snap):
    code, out = run("recommend", "--snapshot", str(snap), "--name", "Bob Jones", "--query", "network",
                    "--role", "prime", "--criterion", "citation", "--t1", "1", "--t2", "3", "--format", "table")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "seed: Bob Jones (prime)"
    assert lines[2].split() == ["rank", "role", "name", "i1", "i2", "f"]


def test_recommend_unknown_name(snap, capsys):
    code, _ = run("recommend", "--snapshot", str(snap), "--name", "Ghost Writer", "--query", "x")
    assert code == EXIT_NOT_FOUND
    assert "Ghost Writer" in capsys.readouterr().err


@pytest.mark.parametrize("extra", [["-k", "0"], ["--scorer", "lsi"], ["--t1", "40", "--t2", "20"],
                                   ["--role", "dean"], ["--t1", "x"]])
def test_recommend_usage_errors(snap, extra):
    code, _ = run("recommend", "--snapshot", str(snap), "--name", "Bob Jones", "--query", "x", *extra)
    assert code == EXIT_USAGE


def test_no_command_is_usage_error():
    assert run()[0] == EXIT_USAGE


def test_classify_golden(snap):
    code, out = run("classify", "--snapshot", str(snap), "--name", "Gina Gray")
    assert code == 0
    assert out.strip() == "Gina Gray\tstudent\tpaper=1"
    assert run("classify", "--snapshot", str(snap), "--name", "Nope")[0] == EXIT_NOT_FOUND


@pytest.mark.parametrize("kind", ["paper", "citation", "neighbor"])
def test_classify_matches_library(snap, kind):
    model = prepare(parse_corpus_file(GOLDEN))
    crit = RoleCriterion(kind, 1, 3)
    for name, rec in model.bundle.authors.items():
        code, out = run("classify", "--snapshot", str(snap), "--name", name,
                        "--criterion", kind, "--t1", "1", "--t2", "3")
        assert code == 0
        assert out.split("\t")[1] == classify(rec, model.citation, crit).label


def test_classify_synthetic_prime(tmp_path):
    src = tmp_path / "prolific.txt"
    src.write_text("\n\n".join(f"#*Paper {i}\n#@Prolific Person\n#index{i}" for i in range(45)) + "\n")
    path = tmp_path / "s.json"
    assert run("build", "--input", str(src), "--snapshot", str(path))[0] == 0
    code, out = run("classify", "--snapshot", str(path), "--name", "Prolific Person")
    assert out.strip() == "Prolific Person\tprime\tpaper=45"


def test_module_entry_point(snap):
    proc = subprocess.run([sys.executable, "-m", "teamrec", "stats", "--snapshot", str(snap)],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert proc.stdout.startswith("papers: 5")
