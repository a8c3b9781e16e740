import sys

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "default",
    deadline=None,
    max_examples=40,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")

# Running example: C is the ambient monoid, S a submonoid with three gaps.
C_EX = [(1, 1), (1, 2), (2, 1), (3, 1)]
S_EX = [(1, 2), (2, 1), (2, 2), (3, 1), (3, 5)]

# 2x6 homogeneous system whose last coordinate projects onto {6,2,7,3,5}.
HOM_EX = [[1, 2, 2, 3, 3, -1], [2, 1, 2, 1, 5, -1]]

# [S | -g_1] with right-hand side g_1 = (1,1).
INHOM_EX = [[1, 2, 2, 3, 3, -2], [2, 1, 2, 1, 5, -1]]

PREIMAGE_GENS = [
    (0, 0, 0, 1), (0, 0, 1, 0), (0, 1, 0, 0), (1, 0, 0, 1), (1, 0, 2, 0),
    (1, 1, 1, 0), (1, 2, 0, 0), (2, 0, 0, 0), (3, 0, 0, 0),
]


@pytest.fixture
def c_ex():
    return C_EX


@pytest.fixture
def s_ex():
    return S_EX


def pytest_terminal_summary(terminalreporter):
    acceptance = sys.modules.get("test_acceptance")
    if acceptance is None:
        return
    ran = {int(r.nodeid.split("criterion_")[1].split("_")[0])
           for key in ("passed", "failed") for r in terminalreporter.stats.get(key, [])
           if "test_acceptance.py::test_criterion_" in r.nodeid}
    if not ran:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ran):
        terminalreporter.write_line(acceptance.RESULTS.get(n, f"criterion {n}: FAIL (did not complete)"))
