"""Brute-force decomposition used to cross-check :mod:`symdecomp.decomp`.

Nothing here touches the partition machinery or the chain-rule
coefficients. For each degree we expand every candidate product of
elementary symmetric polynomials, write down one equation per monomial
(not one per orbit) and solve by exact Gaussian elimination.
"""

from fractions import Fraction
from itertools import product

from symdecomp.poly import (
    NotSymmetric,
    Polynomial,
    compose_with_sigma,
    elementary_symmetric,
    symmetry_witness,
)


class InconsistentSystem(ArithmeticError):
    """The monomial equations have no unique solution (an internal bug)."""


def _weight_exponents(n, d):
    # every lam in N^n with sum(i * lam_i) == d, by brute force over boxes
    ranges = [range(d // i + 1) for i in range(1, n + 1)]
    return [lam for lam in product(*ranges)
            if sum(i * e for i, e in enumerate(lam, start=1)) == d]


def _expand(n, lam):
    out = Polynomial.constant(n, 1)
    for i, e in enumerate(lam, start=1):
        for _ in range(e):
            out = out * elementary_symmetric(n, i)
    return out


def _solve_exact(rows, rhs, ncols):
    """Gaussian elimination over ``Fraction``; first nonzero pivot."""
    a = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(rows, rhs)]
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(a)) if a[i][c]), None)
        if pivot is None:
            raise InconsistentSystem(f"column {c} has no pivot")
        a[r], a[pivot] = a[pivot], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c]:
                factor = a[i][c]
                a[i] = [x - factor * y for x, y in zip(a[i], a[r])]
        r += 1
    for i in range(r, len(a)):
        if a[i][-1]:
            raise InconsistentSystem(f"equation {i} is inconsistent")
    return [a[i][-1] for i in range(ncols)]


def oracle_decompose(f):
    """Decompose symmetric ``f`` by solving the raw monomial equations."""
    witness = symmetry_witness(f)
    if witness is not None:
        raise NotSymmetric(*witness)
    n = f.n
    if f.is_zero():
        return Polynomial.zero(n)
    terms = {}
    const = f.coefficient((0,) * n)
    if const:
        terms[(0,) * n] = const
    for d in range(1, f.degree + 1):
        unknowns = _weight_exponents(n, d)
        expansions = [_expand(n, lam) for lam in unknowns]
        monomials = set()
        for e in expansions:
            monomials.update(e.terms)
        monomials.update(nu for nu in f.terms if sum(nu) == d)
        monomials = sorted(monomials)
        rows = [[e.coefficient(nu) for e in expansions] for nu in monomials]
        rhs = [f.coefficient(nu) for nu in monomials]
        for lam, c in zip(unknowns, _solve_exact(rows, rhs, len(unknowns))):
            if c:
                terms[lam] = c
    return Polynomial(n, terms)


def verify_roundtrip(f, g):
    """True iff ``g(sigma(x)) == f`` exactly."""
    if f.n != g.n:
        raise ValueError(f"variable count mismatch: {f.n} vs {g.n}")
    return compose_with_sigma(g, f.n) == f
