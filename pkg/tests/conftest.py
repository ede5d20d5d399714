from pathlib import Path

import pytest

from kgcore import load_hypergraph
from kgcore.oracle import random_hypergraph

DATA = Path(__file__).parent / "data"
TOY_PATH = DATA / "toy.txt"

# criterion number -> (title, passed, detail); filled by test_acceptance
ACCEPTANCE: dict[int, tuple[str, bool, str]] = {}


@pytest.fixture(scope="session")
def toy():
    return load_hypergraph(TOY_PATH)


@pytest.fixture(scope="session")
def ids(toy):
    """Label -> id lookup for the toy fixture, e.g. ``ids("x1", "x3")``."""
    def lookup(*labels):
        return {toy.node_id(x) for x in labels}
    return lookup


@pytest.fixture(scope="session")
def corpus():
    """The 200 seeded random hypergraphs used for oracle cross-checks."""
    return [random_hypergraph(seed) for seed in range(200)]


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        title, ok, detail = ACCEPTANCE[n]
        terminalreporter.write_line(f"AC{n} {'PASS' if ok else 'FAIL'}  {title}: {detail}")
