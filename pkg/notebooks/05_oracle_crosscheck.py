"""
Cross-checking against brute-force linear algebra
=================================================

``oracle_decompose`` ignores the triangular structure: it expands every
candidate product of elementary symmetric polynomials and solves all
monomial equations by Gaussian elimination. It is slow but obviously
correct, which makes it a good referee.
"""

import random
import time

from symdecomp import Polynomial, compose_with_sigma, decompose, oracle_decompose

rng = random.Random(1)
agree = 0
t_fast = t_slow = 0.0
for _ in range(30):
    n = rng.randint(2, 3)
    g = Polynomial(n, {tuple(rng.randint(0, 2) for _ in range(n)): rng.randint(-9, 9)
                       for _ in range(4)})
    f = compose_with_sigma(g, n)
    t0 = time.perf_counter()
    a = decompose(f)
    t1 = time.perf_counter()
    b = oracle_decompose(f)
    t2 = time.perf_counter()
    t_fast += t1 - t0
    t_slow += t2 - t1
    agree += a == b == g
print(f"agreement: {agree}/30, triangular {t_fast:.3f}s vs oracle {t_slow:.3f}s")
