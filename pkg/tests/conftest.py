import os
import sys

import pytest
from hypothesis import settings

sys.path.insert(0, os.path.dirname(__file__))

from soncexpose.corpus import fuzz_corpus  # noqa: E402
from soncexpose.rays import SoncCone  # noqa: E402

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

ACCEPTANCE_LINES = []


@pytest.fixture(scope="session")
def corpus():
    return fuzz_corpus()


@pytest.fixture(scope="session")
def cones(corpus):
    return [SoncCone.build(A) for A in corpus]


@pytest.fixture
def record():
    def _record(name, ok, detail):
        line = f"{'PASS' if ok else 'FAIL'} criterion {name}: {detail}"
        ACCEPTANCE_LINES.append(line)
        print(line)
    return _record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
