import random
from itertools import combinations

import pytest

from divgraph import kernels
from divgraph.graph import SimpleGraph

KERNEL_FUNCS = ("distance_matrix", "component_labels", "shortest_cycle", "shortest_cycle_at_least", "find_embedding")


@pytest.fixture(params=sorted(kernels.backends()))
def backend(request, monkeypatch):
    """Route all graph queries through one kernel backend."""
    impl = kernels.backends()[request.param]
    for name in KERNEL_FUNCS:
        monkeypatch.setattr(kernels, name, getattr(impl, name))
    return request.param


def random_graph(rng: random.Random, max_n: int = 8, p: float = 0.4) -> SimpleGraph:
    n = rng.randint(0, max_n)
    return SimpleGraph(range(n), [e for e in combinations(range(n), 2) if rng.random() < p])


ACCEPTANCE = {}


@pytest.fixture
def criterion(request):
    """Record one acceptance line; the test fails through its own asserts."""
    name = request.node.get_closest_marker("criterion").args[0]
    ACCEPTANCE[name] = "FAIL"
    info = {}
    yield info
    if request.node.rep_call.passed:
        ACCEPTANCE[name] = "PASS"
    if info:
        ACCEPTANCE[name] += "  (" + ", ".join(f"{k}={v}" for k, v in info.items()) + ")"


@pytest.hookimpl(hookwrapper=True, tryfirst=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    setattr(item, "rep_" + rep.when, rep)


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(name): acceptance criterion")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, line in ACCEPTANCE.items():
        terminalreporter.write_line(f"{line.split()[0]:4}  {name}{line[4:]}")
