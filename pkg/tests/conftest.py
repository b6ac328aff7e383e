import random

import pytest

from sudoku_chroma import Graph, complete, corona, cycle, line_graph, path, star, wheel

from oracles import random_connected_edges


def _corpus():
    graphs = {
        "K3": complete(3),
        "K4": complete(4),
        "C5": cycle(5),
        "W3": wheel(3),
        "W4": wheel(4),
        "W5": wheel(5),
        "P4": path(4),
        "star3": star(3),
        "C3oK1": corona(cycle(3), path(1)),
        "C4oK1": corona(cycle(4), path(1)),
        "K3oK1": corona(complete(3), path(1)),
        "K4oK1": corona(complete(4), path(1)),
        "K3oK2": corona(complete(3), complete(2)),
        "C3oP2": corona(cycle(3), path(2)),
        "L(C3oK1)": line_graph(corona(cycle(3), path(1))),
    }
    rng = random.Random(20261016)
    for i in range(8):
        order = rng.randint(5, 8)
        graphs[f"rand{i}"] = Graph.from_edges(order, random_connected_edges(rng, order, 0.35))
    return graphs


CORPUS = _corpus()


@pytest.fixture(params=sorted(CORPUS), ids=str)
def corpus_graph(request):
    return CORPUS[request.param]


# --- acceptance reporting ------------------------------------------------------
# Tests marked ``@pytest.mark.criterion(n, "title")`` get one PASS/FAIL line
# each in the terminal summary.

_CRITERIA: dict[int, tuple[str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or report.when != "call":
        return
    number, title = marker.args
    status = "PASS" if report.passed else "FAIL"
    _CRITERIA[number] = (status, title)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        status, title = _CRITERIA[number]
        terminalreporter.write_line(f"criterion {number:2d}: {status}  {title}")
