"""
Two variables: closed-form coefficients
=======================================

With ``n = 2`` every system entry comes from at most one decomposition and
has the closed form ``lam1! / ((nu1 - lam2)! (nu2 - lam2)!)``. Here we
compare it with the general enumeration and print a few systems.
"""

from symdecomp import Polynomial, build_system, coefficient, n2_coefficient
from symdecomp.partitions import degree_classes

mismatches = 0
for d in range(1, 13):
    for nu in degree_classes(2, d):
        for lam2 in range(d // 2 + 1):
            lam = (d - 2 * lam2, lam2)
            mismatches += n2_coefficient(nu, lam) != coefficient(nu, lam)
print("mismatches up to degree 12:", mismatches)

for d in (4, 5, 8):
    system = build_system(2, d, Polynomial.zero(2), closed_form_n2=True)
    print(f"d = {d}")
    for rep, row in zip(system.rows, system.matrix):
        print(" ", rep, row)
