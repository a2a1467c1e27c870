import random

import pytest

from hibi.groebner import MPoly, Ring


def random_poly(rng: random.Random, ring: Ring, max_deg=4, max_terms=3, coeff=3):
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        d = rng.randint(0, max_deg)
        mon = [0] * ring.nvars
        for _ in range(d):
            mon[rng.randrange(ring.nvars)] += 1
        c = rng.randint(-coeff, coeff) or 1
        terms[tuple(mon)] = terms.get(tuple(mon), 0) + c
    return MPoly(ring, terms)


@pytest.fixture
def rng():
    return random.Random(12345)


_labels = {}
_acceptance = []


def pytest_collection_modifyitems(items):
    for item in items:
        if item.module.__name__.endswith("test_acceptance"):
            doc = (getattr(item.function, "__doc__", None) or item.name).strip()
            _labels[item.nodeid] = doc.splitlines()[0]


def pytest_runtest_logreport(report):
    if report.nodeid in _labels and (report.when == "call" or report.failed):
        _acceptance.append(report)


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for r in _acceptance:
        terminalreporter.write_line(f"{'PASS' if r.passed else 'FAIL'}  {_labels[r.nodeid]}")
