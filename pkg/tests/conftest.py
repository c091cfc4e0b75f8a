import numpy as np
import pytest
from hypothesis import strategies as st

from rindler_coding.xstate import XStateParams
from rindler_coding.unruh import R_MAX

SINGLET = np.array(
    [[0, 0, 0, 0], [0, 0.5, -0.5, 0], [0, -0.5, 0.5, 0], [0, 0, 0, 0]], dtype=complex
)


def _physical(c):
    cx, cy, cz = c
    return 1 + cz >= abs(cx - cy) and 1 - cz >= abs(cx + cy)


unit = st.floats(-1.0, 1.0, allow_nan=False)
c_triples = st.tuples(unit, unit, unit).filter(_physical).map(lambda c: XStateParams(*c))
angles = st.floats(0.0, R_MAX, allow_nan=False)
seeds = st.integers(0, 2**32 - 1)


@pytest.fixture
def rng():
    return np.random.default_rng(20261018)


ACCEPTANCE_KEY = pytest.StashKey[list]()


@pytest.fixture
def acceptance_log(request):
    """Record one PASS/FAIL line per acceptance criterion; printed at session end."""
    lines = request.config.stash.setdefault(ACCEPTANCE_KEY, [])

    def record(label: str, ok: bool, detail: str) -> bool:
        line = f"[{'PASS' if ok else 'FAIL'}] {label}: {detail}"
        lines.append(line)
        print(line)
        return ok

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash.get(ACCEPTANCE_KEY, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
