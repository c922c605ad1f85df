import json
from pathlib import Path

import pytest

from ptord import CurveModel

DATA = Path(__file__).parent / "data"

# y^2 = x^3 - 432x - 864, conductor 25920 = 2^6 3^4 5
E0_COEFFS = (0, 0, 0, -432, -864)

# (ell, p) -> (d, branch) for E0; (3, 11) is 2*e*r = 60 (T10.2), see README
WORKED_EXAMPLE = {
    (2, 3): (48, "T12.2"),
    (2, 5): (96, "T12.2"),
    (2, 7): (144, "T12.2"),
    (2, 11): (240, "T12.2"),
    (3, 5): (24, "T10.2"),
    (3, 7): (36, "T10.2"),
    (3, 11): (60, "T10.2"),
    (5, 3): (6, "T2.1.1"),
    (5, 7): (42, "T2.1.1"),
    (5, 11): (55, "T2.1.1"),
    (7, 3): (6, "T1.2"),
    (7, 5): (4, "T1.1"),
    (7, 11): (10, "T1.1"),
}


@pytest.fixture
def E0():
    return CurveModel(*E0_COEFFS)


def load_jsonl(name):
    with open(DATA / name, encoding="utf-8") as fh:
        return [json.loads(line) for line in fh if line.strip()]


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(RESULTS):
        ok, title, detail = RESULTS[num]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {num}: {title} ({detail})")
