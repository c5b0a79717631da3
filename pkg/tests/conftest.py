import json
from pathlib import Path

import pytest

from crmine import build_index, ingest_tree, save_snapshot

DATA = Path(__file__).parent / "data"

_acceptance_lines = []


@pytest.fixture
def acceptance():
    """Recorder for acceptance criteria: prints and asserts one line each."""

    def record(number, name, condition, detail=""):
        status = "PASS" if condition else "FAIL"
        suffix = f" ({detail})" if detail else ""
        line = f"[ACCEPTANCE {number}] {name}: {status}{suffix}"
        _acceptance_lines.append(line)
        print(line)
        assert condition, line

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def demo_dir():
    return DATA / "demo"


@pytest.fixture(scope="session")
def planted_dir():
    return DATA / "planted"


@pytest.fixture(scope="session")
def hostile_dir():
    return DATA / "hostile"


@pytest.fixture(scope="session")
def goldens_dir():
    return DATA / "goldens"


@pytest.fixture(scope="session")
def demo_meta(demo_dir):
    return json.loads((demo_dir / "meta.json").read_text())


@pytest.fixture(scope="session")
def planted_meta(planted_dir):
    return json.loads((planted_dir / "meta.json").read_text())


@pytest.fixture(scope="session")
def demo_result(demo_dir):
    return ingest_tree(demo_dir / "corpus")


@pytest.fixture(scope="session")
def demo_index(demo_result):
    return build_index(demo_result.docs)


@pytest.fixture(scope="session")
def demo_snapshot(demo_index, tmp_path_factory):
    path = tmp_path_factory.mktemp("snapshot") / "demo.bin"
    save_snapshot(demo_index, path)
    return path


@pytest.fixture(scope="session")
def planted_result(planted_dir):
    return ingest_tree(planted_dir / "corpus")


@pytest.fixture(scope="session")
def planted_index(planted_result):
    return build_index(planted_result.docs)
