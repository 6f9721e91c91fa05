import pytest


def pytest_addoption(parser):
    parser.addoption("--slow", action="store_true", default=False,
                     help="run the long full-scale checks")


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: long full-scale check, needs --slow")
    config.addinivalue_line("markers", "criterion(label): acceptance criterion")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--slow"):
        return
    skip = pytest.mark.skip(reason="needs --slow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


# acceptance criteria report one PASS/FAIL line each at the end of the run
_CRITERIA = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and not report.passed):
        status = "SKIP" if report.skipped else ("PASS" if report.passed else "FAIL")
        _CRITERIA.append(f"{status}  {marker.args[0]}")


def pytest_terminal_summary(terminalreporter):
    if _CRITERIA:
        terminalreporter.section("acceptance criteria")
        for line in _CRITERIA:
            terminalreporter.write_line(line)
