import pytest

from snalab import corpus

_acceptance: dict[str, tuple[str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(label, text): acceptance criterion reported in the summary")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    label, text = mark.args
    if rep.when == "call" or (rep.when == "setup" and rep.outcome != "passed"):
        _acceptance[label] = ("PASS" if rep.outcome == "passed" else "FAIL", text)


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(_acceptance, key=lambda s: int(s[2:])):
        status, text = _acceptance[label]
        terminalreporter.write_line(f"{label:5} {status}  {text}")


@pytest.fixture(scope="session")
def srls():
    return corpus.srls()


@pytest.fixture(scope="session")
def snas():
    return corpus.snas()


@pytest.fixture(scope="session")
def k_s1():
    return corpus.k_s1()


@pytest.fixture(scope="session")
def t7():
    return corpus.t7()
