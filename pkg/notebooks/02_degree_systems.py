"""
The per-degree triangular systems
=================================

For each degree ``d`` the unknown coefficients of ``g`` are those ``g[lam]``
with weight ``sum(i * lam_i) == d``. There is one equation per partition of
``d`` into at most ``n`` parts. With rows in lexicographically descending
order and columns given by successive differences of the row partition, the
matrix is lower triangular with ones on the diagonal.
"""

from math import factorial

from symdecomp import Polynomial, build_system, enumerate_decompositions, solve_degree
from symdecomp.cli import format_system
from symdecomp.poly import exponent_factorial

for d in range(1, 5):
    system = build_system(3, d, Polynomial.zero(3))
    print(f"degree {d}")
    print(format_system(system))

###############################################################################
# The first column is ``d! / nu!``.

system = build_system(4, 6, Polynomial.zero(4))
for rep, row in zip(system.rows, system.matrix):
    assert row[0] == factorial(6) // exponent_factorial(rep)
print("first column of n=4, d=6:", [row[0] for row in system.matrix])

###############################################################################
# Entries below the diagonal can collect several contributions. For
# ``nu = (2, 1, 1)`` and ``lam = (2, 1, 0)`` the single ``s2`` factor can
# cover any of three pairs of variables.

for parts in enumerate_decompositions((2, 1, 1), (2, 1, 0)):
    print([(p.support, p.multiplicity) for p in parts])

###############################################################################
# Solving one system by forward substitution.

from symdecomp import parse_poly

f = parse_poly("3*x1*x2*x3 - x1*x3^2 - x1^2*x3 - x2*x3^2 - x2^2*x3 - x1*x2^2 - x1^2*x2", 3)
print(solve_degree(build_system(3, 3, f)))
