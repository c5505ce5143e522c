import random

import pytest

from sagbiperm import generate_group, make_order
from sagbiperm.permgroup import parse_generators

FIXTURE_GENS = {
    "C3": "(1 2 3)",
    "S3": "(1 2);(1 2 3)",
    "S4": "(1 2);(1 2 3 4)",
    "C2x": "(1 2)(3 4)",
    "V4": "(1 2)(3 4);(1 3)(2 4)",
    "C4": "(1 2 3 4)",
    "A4": "(1 2 3);(2 3 4)",
    "C5": "(1 2 3 4 5)",
    "D4": "(1 2 3 4);(1 3)",
    "S2xS2": "(1 2);(3 4)",
}

NON_REFLECTION = ["C3", "C2x", "V4", "C4", "A4", "C5", "D4"]


def group(spec, n=None):
    n, gens = parse_generators(spec, n)
    return generate_group(gens, n=n)


def named(name):
    return group(FIXTURE_GENS[name])


def symmetric(n):
    if n == 1:
        return generate_group([], n=1)
    return group("(1 2);(" + " ".join(map(str, range(1, n + 1))) + ")")


def random_orders(n, count, seed):
    """Admissible integer matrix orders, entries in [-3, 3], by rejection sampling."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        rows = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)]
        try:
            out.append(make_order("custom", n, rows))
        except ValueError:
            continue
    return out


@pytest.fixture
def a3():
    return named("C3")


@pytest.fixture
def s3():
    return named("S3")


@pytest.fixture
def lex3():
    return make_order("lex", 3)


_acceptance = []


def pytest_runtest_logreport(report):
    if "test_acceptance.py" in report.nodeid and report.when == "call":
        _acceptance.append((report.nodeid.split("::")[-1], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _acceptance:
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}")
