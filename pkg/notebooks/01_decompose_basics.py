"""
Writing a symmetric polynomial in elementary symmetric polynomials
===================================================================

Every symmetric polynomial ``f(x1, ..., xn)`` can be written uniquely as
``g(s1, ..., sn)`` where ``sk`` is the k-th elementary symmetric polynomial.
``symdecomp.decompose`` returns that ``g``, with exact rational coefficients.
"""

from symdecomp import compose_with_sigma, decompose, format_poly, parse_poly

# A symmetric quadratic in two variables.
f = parse_poly("x1 + x2 + 3*x1^2 + 3*x2^2 - 5*x1*x2", 2)
g = decompose(f)
print("f =", format_poly(f))
print("g =", format_poly(g, "y"))

# Substituting y1 -> x1 + x2 and y2 -> x1*x2 gives f back.
assert compose_with_sigma(g, 2) == f

###############################################################################
# Three variables work the same way. Coefficients may be fractions.

f3 = parse_poly("1/2*x1^2 + 1/2*x2^2 + 1/2*x3^2 + x1*x2*x3", 3)
print("g =", format_poly(decompose(f3), "y"))

###############################################################################
# Power sums give Newton's identities, e.g. x1^4 + x2^4 + x3^4 + x4^4.

p4 = parse_poly("x1^4 + x2^4 + x3^4 + x4^4", 4)
print("p4 =", format_poly(decompose(p4), "y"))

###############################################################################
# Non-symmetric input is rejected with a witness.

from symdecomp import NotSymmetric

try:
    decompose(parse_poly("x1^2 + x2", 2))
except NotSymmetric as exc:
    print("rejected:", exc)
