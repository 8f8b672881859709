from pathlib import Path

import pytest

from adinkra.graph import parse_agf

DATA = Path(__file__).parent / "data"

_criteria: list[tuple[str, bool, str]] = []


def load(name: str):
    return parse_agf((DATA / name).read_text())


@pytest.fixture
def k4():
    return load("k4.agf")


@pytest.fixture
def q3_twisted():
    return load("q3_twisted.agf")


@pytest.fixture
def adinkra_242():
    return load("adinkra_242.agf")


@pytest.fixture
def adinkra_341():
    return load("adinkra_341.agf")


@pytest.fixture
def adinkra_44():
    return load("adinkra_44.agf")


@pytest.fixture
def criterion(request):
    """Record one acceptance criterion; the verdict is printed in the terminal summary."""
    entry = {"name": request.node.name, "detail": ""}
    yield entry
    rep = getattr(request.node, "rep_call", None)
    ok = rep is not None and rep.passed
    _criteria.append((entry["name"], ok, entry["detail"]))


@pytest.hookimpl(hookwrapper=True, tryfirst=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in _criteria:
        line = f"{'PASS' if ok else 'FAIL'}  {name}"
        if detail:
            line += f"  ({detail})"
        terminalreporter.write_line(line)
