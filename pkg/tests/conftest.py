import random
from fractions import Fraction
from itertools import product

import pytest

from symdecomp.poly import Polynomial

ACCEPTANCE_RESULTS = []


def weight_exponents(n, max_weight):
    ranges = [range(max_weight // i + 1) for i in range(1, n + 1)]
    return [lam for lam in product(*ranges)
            if sum(i * e for i, e in enumerate(lam, start=1)) <= max_weight]


def random_fraction(rng, bound=50):
    return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))


def random_g(rng, n, max_weight, max_terms=6):
    pool = weight_exponents(n, max_weight)
    k = rng.randint(0, min(max_terms, len(pool)))
    return Polynomial(n, {lam: random_fraction(rng) for lam in rng.sample(pool, k)})


def random_poly(rng, n, max_degree, max_terms=6, bound=10**6):
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        nu = [0] * n
        for _ in range(rng.randint(0, max_degree)):
            nu[rng.randrange(n)] += 1
        terms[tuple(nu)] = Fraction(rng.randint(-bound, bound), rng.randint(1, bound))
    return Polynomial(n, terms)


@pytest.fixture
def rng():
    return random.Random(20261015)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, ok in sorted(ACCEPTANCE_RESULTS):
        terminalreporter.write_line(f"AC{number:<3}{'PASS' if ok else 'FAIL'}  {title}")
