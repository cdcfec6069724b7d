import itertools

import pytest

from ppolygons.core import PrimeOrder, VertexCycle


def pytest_addoption(parser):
    parser.addoption("--extended", action="store_true", default=False,
                     help="run the p=13 exhaustive enumeration")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--extended"):
        return
    skip = pytest.mark.skip(reason="needs --extended")
    for item in items:
        if "extended" in item.keywords:
            item.add_marker(skip)


def every_cycle(p, fixed_start=False):
    """Every vertex ordering of a p-polygon (optionally starting at 0)."""
    order = PrimeOrder(p)
    if fixed_start:
        for rest in itertools.permutations(range(1, p)):
            yield VertexCycle(order, (0,) + rest)
    else:
        for perm in itertools.permutations(range(p)):
            yield VertexCycle(order, perm)


def brute_force_class(vertices, n):
    """Smallest vertex tuple reachable by plane rotation, restart and reversal.

    Works directly on vertex labels, without step sequences.
    """
    best = None
    for k in range(n):
        moved = [(v + k) % n for v in vertices]
        for seq in (moved, moved[::-1]):
            i = seq.index(0)
            cand = tuple(seq[i:] + seq[:i])
            if best is None or cand < best:
                best = cand
    return best


@pytest.fixture(scope="session")
def cycles5():
    return list(every_cycle(5))


@pytest.fixture(scope="session")
def cycles7():
    return list(every_cycle(7, fixed_start=True))


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call_failed = rep.failed
