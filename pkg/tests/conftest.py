import pytest
from hypothesis import strategies as st

from chromdisc.graph import Graph, complete_graph, cycle_graph, new_graph, path_graph


@st.composite
def graphs(draw, min_n=1, max_n=6):
    n = draw(st.integers(min_n, max_n))
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return new_graph(n, chosen)


@pytest.fixture
def k3() -> Graph:
    return complete_graph(3)


@pytest.fixture
def c4() -> Graph:
    # 0-1-2-3-0
    return cycle_graph(4)


@pytest.fixture
def single_edge() -> Graph:
    return new_graph(2, [(0, 1)])


@pytest.fixture
def p4() -> Graph:
    return path_graph(4)


_criteria: list[tuple[str, str]] = []


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance: exit-criteria suite")
    config.addinivalue_line("markers", "criterion(label): acceptance criterion printed in the summary")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _criteria.append((marker.args[0], "PASS" if report.passed else "FAIL"))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for label, status in sorted(_criteria):
        terminalreporter.write_line(f"[{status}] criterion {label}")
