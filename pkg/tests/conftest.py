import pytest


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    """Print one ACCEPTANCE PASS/FAIL line per tagged criterion test.

    The line goes through pytest's terminal reporter, so it lands in the
    run output even though test-time stdout is captured.
    """
    outcome = yield
    report = outcome.get_result()
    if report.when != "call":
        return
    number = getattr(getattr(item, "function", None), "acceptance_number", None)
    if number is None:
        return
    name = item.function.acceptance_name
    status = "PASS" if report.passed else "FAIL"
    reporter = item.config.pluginmanager.get_plugin("terminalreporter")
    if reporter is not None:
        reporter.write_line(f"ACCEPTANCE {status}: {number} {name}")
