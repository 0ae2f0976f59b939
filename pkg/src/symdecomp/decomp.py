"""Decomposition of symmetric polynomials into elementary symmetric ones.

For a symmetric ``f`` in ``n`` variables we look for ``g`` with
``f = g(sigma^1, ..., sigma^n)``. Expanding the composition with the
multivariate chain rule and using that every ``sigma^k`` has 0/1 exponents,
the coefficient of ``x^nu`` in ``sigma^lam`` becomes a sum over ways to
write ``nu`` as a sum of distinct 0/1 vectors with multiplicities, where
the multiplicities of the size-``k`` vectors add up to ``lam_k``. Each such
way contributes ``lam! / prod(multiplicity!)``.

Only ``lam`` of weight ``|nu|`` can contribute, so every degree ``d`` gives
its own square system: one row per partition of ``d`` (at most ``n``
parts), one column per weight-``d`` exponent. Ordered as in
:mod:`symdecomp.partitions`, that system is lower triangular with unit
diagonal and is solved by forward substitution.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import factorial, prod
from typing import NamedTuple

from symdecomp.partitions import degree_classes, orbit, phi
from symdecomp.poly import (
    NotSymmetric,
    Polynomial,
    compose_with_sigma,
    degree,
    exponent_factorial,
    symmetry_witness,
    weight,
)


def require_symmetric(f):
    witness = symmetry_witness(f)
    if witness is not None:
        raise NotSymmetric(*witness)


# -- decompositions ----------------------------------------------------------

class Part(NamedTuple):
    support: tuple
    multiplicity: int


def _precedes_key(support):
    # degree first, then x1 before x2 before ... (lexicographically descending tuples)
    return (degree(support), tuple(-e for e in support))


@lru_cache(maxsize=None)
def _supports(n):
    """Nonzero 0/1 vectors of length n, grouped by degree, in precedence order."""
    out = []
    for k in range(1, n + 1):
        group = []
        for idx in combinations(range(n), k):
            group.append(tuple(int(i in idx) for i in range(n)))
        group.sort(key=_precedes_key)
        out.append(group)
    return out


def enumerate_decompositions(nu, lam):
    """All ways to build ``nu`` from distinct 0/1 supports selected by ``lam``.

    Each result is a tuple of :class:`Part` in precedence order (degree,
    then ``x1`` before ``x2`` ...). The multiplicities of supports of size
    ``k`` sum to ``lam[k-1]`` and ``sum(multiplicity * support) == nu``.

    >>> for parts in enumerate_decompositions((2, 1, 1), (2, 1, 0)):
    ...     print([(p.support, p.multiplicity) for p in parts])
    [((1, 0, 0), 1), ((0, 0, 1), 1), ((1, 1, 0), 1)]
    [((1, 0, 0), 1), ((0, 1, 0), 1), ((1, 0, 1), 1)]
    [((1, 0, 0), 2), ((0, 1, 1), 1)]
    """
    nu = tuple(nu)
    lam = tuple(lam)
    if len(nu) != len(lam):
        raise ValueError(f"length mismatch: {nu} vs {lam}")
    if not any(nu):
        raise ValueError("nu must be nonzero")
    if weight(lam) != degree(nu):
        return []
    return list(_enumerate(nu, lam))


def _enumerate(nu, lam):
    n = len(nu)
    groups = [(k, g) for k, g in zip(range(1, n + 1), _supports(n)) if lam[k - 1]]
    results = []
    remaining = list(nu)
    parts = []

    def place_group(gi):
        if gi == len(groups):
            if not any(remaining):
                results.append(tuple(parts))
            return
        k, group = groups[gi]
        fill(gi, group, 0, lam[k - 1])

    def fill(gi, group, si, budget):
        if budget == 0:
            place_group(gi + 1)
            return
        if si == len(group):
            return
        support = group[si]
        cols = [i for i, e in enumerate(support) if e]
        cap = min(budget, min(remaining[i] for i in cols))
        for m in range(cap + 1):
            if m:
                for i in cols:
                    remaining[i] -= m
                parts.append(Part(support, m))
            fill(gi, group, si + 1, budget - m)
            if m:
                parts.pop()
                for i in cols:
                    remaining[i] += m

    place_group(0)
    return results


def _decomposition_value(lam, parts):
    return exponent_factorial(lam) // prod(factorial(p.multiplicity) for p in parts)


@lru_cache(maxsize=None)
def coefficient(nu, lam):
    """Integer coefficient of ``g_lam`` in the equation for ``f_nu``.

    Equivalently, the coefficient of ``x^nu`` in ``prod_k (sigma^k)^lam_k``.

    >>> coefficient((2, 1, 1), (2, 1, 0))
    5
    >>> coefficient((2, 1, 1), (4, 0, 0))
    12
    """
    nu = tuple(nu)
    lam = tuple(lam)
    return sum(_decomposition_value(lam, parts)
               for parts in enumerate_decompositions(nu, lam))


def n2_coefficient(nu, lam):
    """Closed form of :func:`coefficient` for two variables.

    With ``nu1 >= nu2`` there is at most one decomposition, using
    ``(1, 0)``, ``(0, 1)`` and ``(1, 1)`` with multiplicities
    ``nu1 - lam2``, ``nu2 - lam2`` and ``lam2``.
    """
    nu1, nu2 = nu
    lam1, lam2 = lam
    if nu1 < nu2:
        raise ValueError(f"need nu1 >= nu2, got {nu}")
    if lam1 + 2 * lam2 != nu1 + nu2 or lam2 > nu2:
        return 0
    return factorial(lam1) // (factorial(nu1 - lam2) * factorial(nu2 - lam2))


# -- per-degree systems ------------------------------------------------------

@dataclass(frozen=True)
class DegreeSystem:
    """The square lower-triangular system for one degree ``d``.

    ``matrix[i][j]`` is the coefficient of ``g[cols[j]]`` in the equation
    for ``f[rows[i]]``; ``rhs[i]`` is ``f[rows[i]]``.
    """

    n: int
    d: int
    rows: tuple
    cols: tuple
    matrix: tuple
    rhs: tuple

    def check(self):
        """Raise ``AssertionError`` unless the structural invariants hold."""
        size = len(self.rows)
        assert len(self.cols) == size == len(self.matrix) == len(self.rhs)
        for i, row in enumerate(self.matrix):
            assert self.cols[i] == phi(self.rows[i])
            assert row[i] == 1, f"diagonal entry {i} is {row[i]}"
            assert not any(row[i + 1:]), f"row {i} has entries above the diagonal"
            assert row[0] == factorial(self.d) // exponent_factorial(self.rows[i])


def system_matrix(n, d, closed_form_n2=False):
    """``(rows, cols, matrix)`` for degree ``d`` in ``n`` variables."""
    return _system_matrix(n, d, bool(closed_form_n2))


@lru_cache(maxsize=None)
def _system_matrix(n, d, closed_form_n2):
    if closed_form_n2 and n != 2:
        raise ValueError("the closed form is only available for n = 2")
    rows = tuple(degree_classes(n, d))
    cols = tuple(phi(r) for r in rows)
    coef = n2_coefficient if closed_form_n2 else coefficient
    matrix = tuple(
        # entries above the diagonal vanish; skip the enumeration there
        tuple(coef(r, c) if j <= i else 0 for j, c in enumerate(cols))
        for i, r in enumerate(rows))
    return rows, cols, matrix


def build_system(n, d, f, closed_form_n2=False, full=False):
    """Assemble the degree-``d`` system for symmetric ``f``.

    By default entries above the diagonal are not enumerated (they are
    zero). Pass ``full=True`` to compute every entry, e.g. to check
    triangularity.
    """
    if f.n != n:
        raise ValueError(f"f has {f.n} variables, expected {n}")
    if d < 1:
        raise ValueError("degree systems start at d = 1")
    if full:
        rows = tuple(degree_classes(n, d))
        cols = tuple(phi(r) for r in rows)
        coef = n2_coefficient if closed_form_n2 else coefficient
        matrix = tuple(tuple(coef(r, c) for c in cols) for r in rows)
    else:
        rows, cols, matrix = system_matrix(n, d, closed_form_n2)
    rhs = tuple(f.coefficient(r) for r in rows)
    if __debug__:
        for r, c in zip(rows, rhs):
            assert all(f.coefficient(mu) == c for mu in orbit(r)), \
                f"coefficients differ across the orbit of {r}"
    return DegreeSystem(n, d, rows, cols, matrix, rhs)


def solve_degree(system):
    """Forward substitution; returns ``{lam: g_lam}`` for every column."""
    solution = []
    for i, row in enumerate(system.matrix):
        acc = Fraction(system.rhs[i])
        for j in range(i):
            if row[j]:
                acc -= row[j] * solution[j]
        solution.append(acc / row[i])
    return dict(zip(system.cols, solution))


# -- public decomposition entry points ---------------------------------------

def decompose(f, closed_form_n2=False):
    """Return ``g`` with ``compose_with_sigma(g, f.n) == f``.

    Raises :class:`NotSymmetric` if ``f`` is not symmetric.

    >>> from symdecomp.poly import Polynomial
    >>> f = Polynomial(2, {(1, 0): 1, (0, 1): 1, (2, 0): 3, (0, 2): 3, (1, 1): -5})
    >>> decompose(f) == Polynomial(2, {(1, 0): 1, (2, 0): 3, (0, 1): -11})
    True
    """
    require_symmetric(f)
    return _decompose_symmetric(f, f.degree, closed_form_n2)


def _decompose_symmetric(f, max_degree, closed_form_n2=False):
    n = f.n
    if closed_form_n2 and n != 2:
        raise ValueError("the closed form is only available for n = 2")
    if f.is_zero():
        return Polynomial.zero(n)
    if n == 1:
        # sigma^1 = x1, so g has the same coefficients as f
        return f.truncate(max_degree)
    terms = {}
    const = f.coefficient((0,) * n)
    if const:
        terms[(0,) * n] = const
    for d in range(1, max_degree + 1):
        if not any(degree(nu) == d for nu in f.terms):
            continue
        system = build_system(n, d, f, closed_form_n2)
        for lam, c in solve_degree(system).items():
            if c:
                terms[lam] = c
    return Polynomial(n, terms)


def decompose_truncated(f_trunc, max_degree, closed_form_n2=False):
    """Decompose a symmetric series known up to total degree ``max_degree``.

    Returns all coefficients of weight at most ``max_degree``. Terms of
    ``f_trunc`` above ``max_degree`` are not allowed.
    """
    if max_degree < 0:
        raise ValueError("max_degree must be nonnegative")
    if f_trunc.degree is not None and f_trunc.degree > max_degree:
        raise ValueError(
            f"input has degree {f_trunc.degree} above the truncation order {max_degree}")
    require_symmetric(f_trunc)
    return _decompose_symmetric(f_trunc, max_degree, closed_form_n2)


def compose_truncated(g, n, max_degree):
    """Total-degree-``max_degree`` truncation of ``g(sigma(x))``.

    ``sigma^lam`` is homogeneous of degree ``weight(lam)``, so only the
    weight-``<= max_degree`` part of ``g`` is expanded.
    """
    if g.n != n:
        raise ValueError(f"g has {g.n} variables, expected {n}")
    return compose_with_sigma(g.truncate_weight(max_degree), n)


__all__ = [
    "DegreeSystem",
    "NotSymmetric",
    "Part",
    "build_system",
    "coefficient",
    "compose_truncated",
    "decompose",
    "decompose_truncated",
    "enumerate_decompositions",
    "n2_coefficient",
    "solve_degree",
    "system_matrix",
]
