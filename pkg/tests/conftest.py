import random

import pytest

from qgk.freealg import NCPoly
from qgk.scalar import LaurentQ

ACCEPTANCE_LINES = []


def random_laurent(rng: random.Random, span: int = 2, terms: int = 3) -> LaurentQ:
    out = LaurentQ()
    for _ in range(terms):
        out = out + LaurentQ.monomial(rng.randint(-span, span), rng.randint(-4, 4))
    return out


def random_ncpoly(rng: random.Random, gens, max_deg: int, terms: int = 3) -> NCPoly:
    n = len(gens)
    out = NCPoly.zero(gens)
    for _ in range(terms):
        d = rng.randint(0, max_deg)
        w = tuple(rng.randrange(n) for _ in range(d))
        out = out + NCPoly.from_word(gens, w, random_laurent(rng, 1, 2))
    return out


@pytest.fixture
def rng():
    return random.Random(20240611)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
