import random
import sys
from fractions import Fraction

import pytest

from pbwalg import catalog
from pbwalg.coeffring import ParamPoly


def sym(*names):
    out = tuple(ParamPoly.symbol(n) for n in names)
    return out[0] if len(out) == 1 else out


def random_rational(rng, bound=50, nonzero=False):
    while True:
        v = Fraction(rng.randint(-bound, bound), rng.randint(1, bound))
        if v or not nonzero:
            return v


def admissible_point(entry_id, rng, bound=50):
    """Random rational values for every parameter of a catalog entry, avoiding exclusions."""
    R = catalog.get(entry_id).relations()
    while True:
        point = {p: random_rational(rng, bound, nonzero=True) for p in R.params}
        try:
            R.substitute(point)
        except (ValueError, ZeroDivisionError):
            continue
        return point


@pytest.fixture
def rng():
    return random.Random(20261018)


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    results = getattr(module, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(results):
        terminalreporter.write_line(results[n])
