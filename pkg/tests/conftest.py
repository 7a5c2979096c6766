import os

import pytest

ACCEPTANCE_RESULTS: list[tuple[str, str, str]] = []


def pytest_collection_modifyitems(config, items):
    if os.environ.get("HONEYCOMB_EXTENDED", "0") not in ("", "0"):
        return
    skip = pytest.mark.skip(reason="long reproduction; set HONEYCOMB_EXTENDED=1")
    for item in items:
        if "extended" in item.keywords:
            item.add_marker(skip)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    label = item.get_closest_marker("criterion")
    if label is None:
        return
    if report.when == "call" or (report.when == "setup" and report.skipped):
        status = {"passed": "PASS", "failed": "FAIL", "skipped": "SKIP"}[report.outcome]
        callspec = getattr(item, "callspec", None)
        title = label.args[1] + (f" [{callspec.id}]" if callspec else "")
        ACCEPTANCE_RESULTS.append((label.args[0], status, title))


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(id, title): acceptance criterion")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for ident, status, title in ACCEPTANCE_RESULTS:
        terminalreporter.write_line(f"{status}  criterion {ident}: {title}")
