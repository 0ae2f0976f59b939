"""
Truncated power series
======================

A symmetric power series known up to total degree ``D`` determines every
coefficient of ``g`` of weight at most ``D``. For ``f = exp(x1 + x2)`` the
answer is ``exp(y1)``: no ``y2`` terms appear.
"""

from fractions import Fraction
from math import factorial

from symdecomp import Polynomial, compose_truncated, decompose_truncated, format_poly

D = 6
f = Polynomial(2, {(a, b): Fraction(1, factorial(a) * factorial(b))
                   for a in range(D + 1) for b in range(D + 1 - a)})
g = decompose_truncated(f, D)
print("g =", format_poly(g, "y"))

# Going the other way: expand exp(y1) through the elementary symmetric map.
assert compose_truncated(g, 2, D) == f

###############################################################################
# A series with a genuine y2 part: 1 / (1 - x1*x2) in two variables.

h = Polynomial(2, {(k, k): 1 for k in range(D // 2 + 1)})
print("g =", format_poly(decompose_truncated(h, D), "y"))
