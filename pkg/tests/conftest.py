import pytest

ACCEPTANCE: dict[int, tuple[str, bool]] = {}


def record(number: int, title: str, ok: bool) -> None:
    ACCEPTANCE[number] = (title, ok)


@pytest.fixture
def criterion(request):
    """Record the outcome of an acceptance criterion under the given number."""
    marker = request.node.get_closest_marker("criterion")
    number, title = marker.args
    record(number, title, False)
    yield
    rep = getattr(request.node, "rep_call", None)
    record(number, title, rep is not None and rep.passed)


@pytest.hookimpl(hookwrapper=True, tryfirst=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        title, ok = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {title}")
