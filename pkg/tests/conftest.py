import pytest

from blowup.picard import DivisorClass

_CRITERIA: dict[str, str] = {}


@pytest.fixture
def rng():
    import random

    return random.Random(20131015)


def random_class(rng, r, lo=-10**6, hi=10**6):
    return DivisorClass(rng.randint(lo, hi), tuple(rng.randint(lo, hi) for _ in range(r)))


def pytest_runtest_logreport(report):
    if "test_acceptance.py::test_criterion_" not in report.nodeid:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        name = report.nodeid.split("::")[-1][len("test_"):]
        _CRITERIA[name] = report.outcome.upper()


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_CRITERIA):
        verdict = "PASS" if _CRITERIA[name] == "PASSED" else "FAIL"
        terminalreporter.write_line(f"{verdict}  {name}")
