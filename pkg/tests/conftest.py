from fractions import Fraction
from importlib import resources

import pytest

from ctxprob import (canonical_partition_labels, enumerate_two_valued_states,
                     parse_logic)

F = Fraction

# Atom labels printed next to the Greechie diagrams, keyed by our atom names.
PAPER_LABELS = {
    "square": {"a1": {1, 2}, "a2": {3, 4}, "b1": {1, 3}, "b2": {2, 4}},
    "firefly": {"e1": {1, 2}, "e2": {3, 4}, "h": {5}, "f1": {1, 3}, "f2": {2, 4}},
    "pentagon": {
        "c1": {1, 2, 3}, "m1": {7, 8, 9, 10, 11},
        "c2": {4, 5, 6}, "m2": {1, 3, 9, 10, 11},
        "c3": {2, 7, 8}, "m3": {1, 4, 6, 10, 11},
        "c4": {3, 5, 9}, "m4": {1, 2, 4, 7, 11},
        "c5": {6, 8, 10}, "m5": {4, 5, 7, 9, 11},
    },
}

CORPUS = ("square", "firefly", "pentagon", "triangle")


def bundled(name: str) -> str:
    return (resources.files("ctxprob") / "data" / name).read_text()


def load(name: str):
    return parse_logic(bundled(f"{name}.json"))


@pytest.fixture(params=CORPUS, scope="session")
def corpus_logic(request):
    return load(request.param)


@pytest.fixture(scope="session")
def square():
    return load("square")


@pytest.fixture(scope="session")
def firefly():
    return load("firefly")


@pytest.fixture(scope="session")
def pentagon():
    return load("pentagon")


@pytest.fixture(scope="session")
def triangle():
    return load("triangle")


@pytest.fixture(scope="session")
def firefly_labels(firefly):
    return canonical_partition_labels(enumerate_two_valued_states(firefly))


@pytest.fixture(scope="session")
def pentagon_labels(pentagon):
    return canonical_partition_labels(enumerate_two_valued_states(pentagon))


# -- acceptance summary ---------------------------------------------------

def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(n, text): acceptance criterion")
    config._acceptance = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("acceptance")
    if mark is None:
        return
    store = item.config._acceptance
    key = (mark.args[0], mark.args[1])
    failed = rep.failed or (rep.when == "call" and not rep.passed)
    if rep.when == "call" or failed:
        store[key] = store.get(key, True) and not failed


def pytest_terminal_summary(terminalreporter, config):
    store = getattr(config, "_acceptance", {})
    if not store:
        return
    terminalreporter.section("acceptance criteria")
    for (n, text), ok in sorted(store.items()):
        terminalreporter.write_line(f"AC{n:>2} {'PASS' if ok else 'FAIL'}  {text}")
