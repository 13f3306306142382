import io
from pathlib import Path

import pytest

from teamrec import snapshot
from teamrec.corpus import parse_corpus, parse_corpus_file
from teamrec.model import prepare

FIXTURES = Path(__file__).parent / "fixtures"
GOLDEN = FIXTURES / "golden_corpus.txt"

_acceptance_results = []


@pytest.fixture(scope="session")
def golden_path():
    return GOLDEN


@pytest.fixture
def golden_bundle():
    return parse_corpus_file(GOLDEN)


@pytest.fixture
def golden_model(golden_bundle):
    return prepare(golden_bundle)


@pytest.fixture
def golden_snapshot(tmp_path, golden_model):
    path = tmp_path / "golden.json"
    snapshot.save(golden_model, path)
    return path


def bundle_from_text(text):
    return parse_corpus(io.StringIO(text))


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid:
        return
    if report.when == "setup" and report.skipped:
        _acceptance_results.append((report.nodeid.split("::")[-1], "skipped", 0.0))
        return
    if report.when != "call":
        return
    label = report.nodeid.split("::")[-1]
    for key, value in report.user_properties:
        if key == "criterion":
            label = value
    _acceptance_results.append((label, report.outcome, report.duration))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance_results:
        return
    terminalreporter.section("acceptance criteria")
    for label, outcome, duration in _acceptance_results:
        mark = {"passed": "PASS", "skipped": "SKIP"}.get(outcome, "FAIL")
        terminalreporter.write_line(f"[{mark}] {label} ({duration:.3f}s)")
