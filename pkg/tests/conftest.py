import pytest

ACCEPTANCE: dict[str, str] = {}


@pytest.fixture
def criterion(request):
    """Record a one-line verdict for an acceptance criterion."""
    name = request.node.name
    ACCEPTANCE[name] = "FAIL"
    notes = []
    yield notes
    if request.node.rep_call.passed:
        ACCEPTANCE[name] = "PASS"
    ACCEPTANCE[name] += ("  " + "; ".join(notes)) if notes else ""


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    setattr(item, "rep_" + rep.when, rep)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, line in ACCEPTANCE.items():
        terminalreporter.write_line(f"{name}: {line}")
