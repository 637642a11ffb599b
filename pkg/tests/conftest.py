import pytest

_ACCEPTANCE = []


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_runtest_logreport(report):
    if report.when != "call":
        return
    marker = report.user_properties and dict(report.user_properties).get("criterion")
    if marker:
        _ACCEPTANCE.append((marker, "PASS" if report.passed else "FAIL"))


@pytest.fixture(autouse=True)
def _tag_criterion(request, record_property):
    m = request.node.get_closest_marker("criterion")
    if m:
        record_property("criterion", m.args)


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for (number, title), verdict in sorted(_ACCEPTANCE):
        terminalreporter.write_line(f"[{verdict}] {number:2d}. {title}")
