from fractions import Fraction

import pytest
from hypothesis import settings

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

RANK2 = ("A2", "B2", "G2")


@pytest.fixture
def F():
    return Fraction


_CRITERIA: dict[int, str] = {}


@pytest.fixture
def criterion(request):
    """Record one PASS/FAIL line per acceptance criterion; printed in the terminal summary."""
    num = request.node.get_closest_marker("criterion").args[0]
    box = {"note": ""}
    yield box
    rep = getattr(request.node, "rep_call", None)
    ok = rep is not None and rep.passed
    _CRITERIA[num] = f"criterion {num:2d}: {'PASS' if ok else 'FAIL'}  {box['note']}"
    print(_CRITERIA[num])


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_terminal_summary(terminalreporter):
    if _CRITERIA:
        terminalreporter.section("acceptance criteria")
        for k in sorted(_CRITERIA):
            terminalreporter.write_line(_CRITERIA[k])


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")
