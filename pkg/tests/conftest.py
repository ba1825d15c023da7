import random

import pytest
from hypothesis import settings

settings.register_profile("coxlab", derandomize=True, deadline=None, max_examples=60)
settings.load_profile("coxlab")

_ACCEPTANCE: list[tuple[str, bool, str]] = []


def pytest_addoption(parser):
    parser.addoption("--seed", type=int, default=20241017, help="seed for randomized tests")


@pytest.fixture
def rng(request):
    return random.Random(request.config.getoption("--seed"))


@pytest.fixture
def acceptance_record():
    def record(name: str, ok: bool, detail: str = "") -> None:
        _ACCEPTANCE.append((name, ok, detail))

    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in _ACCEPTANCE:
        line = f"{'PASS' if ok else 'FAIL'}  {name}"
        if detail:
            line += f"  ({detail})"
        terminalreporter.write_line(line)
