"""Sparse multivariate polynomials with exact rational coefficients.

Exponents are plain tuples of nonnegative ints (multi-indices). A
:class:`Polynomial` is an immutable map from exponent to nonzero
``Fraction`` with a fixed number of variables ``n``.

The module also provides the elementary symmetric polynomials and
substitution of ``y_i -> sigma^i(x)``::

    >>> g = Polynomial.from_terms(2, {(1, 0): 1, (2, 0): 3, (0, 1): -11})
    >>> compose_with_sigma(g, 2) == Polynomial.from_terms(
    ...     2, {(1, 0): 1, (0, 1): 1, (2, 0): 3, (1, 1): -5, (0, 2): 3})
    True
"""

from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import factorial, prod
from types import MappingProxyType


# -- multi-index helpers -----------------------------------------------------

def degree(nu):
    """Total degree ``|nu|``."""
    return sum(nu)


def weight(nu):
    """Weighted degree ``sum(i * nu_i)`` with 1-based ``i``.

    This is the degree of ``y**nu`` once ``y_i`` is replaced by ``sigma^i``.
    """
    return sum(i * e for i, e in enumerate(nu, start=1))


def exponent_factorial(nu):
    """``nu! = nu_1! * ... * nu_n!``."""
    return prod(factorial(e) for e in nu)


def _check_exponent(nu, n):
    if len(nu) != n:
        raise ValueError(f"exponent {nu!r} has length {len(nu)}, expected {n}")
    if any(e < 0 for e in nu):
        raise ValueError(f"exponent {nu!r} has a negative entry")


# -- polynomials -------------------------------------------------------------

class Polynomial:
    """Immutable sparse polynomial in ``n`` variables over the rationals.

    Zero coefficients are never stored, so two polynomials are equal
    exactly when their term maps are equal.
    """

    __slots__ = ("_n", "_terms", "_hash")

    def __init__(self, n, terms=None):
        if not isinstance(n, int) or n < 1:
            raise ValueError(f"variable count must be a positive integer, got {n!r}")
        clean = {}
        for nu, c in (terms or {}).items():
            nu = tuple(int(e) for e in nu)
            _check_exponent(nu, n)
            c = Fraction(c)
            if c:
                clean[nu] = c
        self._n = n
        self._terms = clean
        self._hash = None

    @classmethod
    def from_terms(cls, n, terms):
        return cls(n, terms)

    @classmethod
    def zero(cls, n):
        return cls(n)

    @classmethod
    def constant(cls, n, c):
        return cls(n, {(0,) * n: c})

    @classmethod
    def monomial(cls, nu, c=1):
        nu = tuple(nu)
        return cls(len(nu), {nu: c})

    @classmethod
    def variable(cls, n, i):
        """The polynomial ``x_i`` (1-based)."""
        if not 1 <= i <= n:
            raise ValueError(f"variable index {i} out of range 1..{n}")
        return cls.monomial(tuple(int(j == i - 1) for j in range(n)))

    @classmethod
    def _trusted(cls, n, terms):
        # terms already canonical: tuple keys of length n, nonzero Fractions
        p = cls.__new__(cls)
        p._n = n
        p._terms = terms
        p._hash = None
        return p

    @property
    def n(self):
        return self._n

    @property
    def terms(self):
        """Read-only view of the term map ``exponent -> Fraction``."""
        return MappingProxyType(self._terms)

    def coefficient(self, nu):
        return self._terms.get(tuple(nu), Fraction(0))

    def is_zero(self):
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    @property
    def degree(self):
        """Total degree, or ``None`` for the zero polynomial."""
        if not self._terms:
            return None
        return max(degree(nu) for nu in self._terms)

    @property
    def weight(self):
        """Largest weight of any term, or ``None`` for the zero polynomial."""
        if not self._terms:
            return None
        return max(weight(nu) for nu in self._terms)

    def truncate(self, max_degree):
        """Drop every term of total degree above ``max_degree``."""
        return Polynomial._trusted(
            self._n, {nu: c for nu, c in self._terms.items() if degree(nu) <= max_degree})

    def truncate_weight(self, max_weight):
        """Drop every term of weight above ``max_weight``."""
        return Polynomial._trusted(
            self._n, {nu: c for nu, c in self._terms.items() if weight(nu) <= max_weight})

    def homogeneous_part(self, d):
        return Polynomial._trusted(
            self._n, {nu: c for nu, c in self._terms.items() if degree(nu) == d})

    # arithmetic

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other._n != self._n:
                raise ValueError(
                    f"variable count mismatch: {self._n} vs {other._n}")
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(self._n, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for nu, c in other._terms.items():
            s = out.get(nu, 0) + c
            if s:
                out[nu] = s
            else:
                out.pop(nu, None)
        return Polynomial._trusted(self._n, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._trusted(self._n, {nu: -c for nu, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = {}
        for nu, a in self._terms.items():
            for mu, b in other._terms.items():
                key = tuple(x + y for x, y in zip(nu, mu))
                out[key] = out.get(key, 0) + a * b
        return Polynomial._trusted(self._n, {k: v for k, v in out.items() if v})

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = Polynomial.constant(self._n, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self._n == other._n and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == Polynomial.constant(self._n, other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._n, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self):
        body = ", ".join(f"{nu}: {c}" for nu, c in sorted(self._terms.items()))
        return f"Polynomial({self._n}, {{{body}}})"


def poly_arith(a, b, op):
    """Apply ``op`` (``"add"``, ``"sub"`` or ``"mul"``) to two polynomials."""
    if a.n != b.n:
        raise ValueError(f"variable count mismatch: {a.n} vs {b.n}")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown operation {op!r}")


# -- symmetric structure -----------------------------------------------------

class NotSymmetric(ValueError):
    """Raised when a polynomial that must be symmetric is not.

    ``transposition`` is a 1-based pair ``(i, j)`` and ``exponent`` a
    multi-index whose coefficient changes under swapping ``x_i`` and ``x_j``.
    """

    def __init__(self, transposition, exponent):
        self.transposition = transposition
        self.exponent = exponent
        i, j = transposition
        super().__init__(
            f"polynomial is not symmetric: swapping x{i} and x{j} "
            f"changes the coefficient of exponent {exponent}")


@lru_cache(maxsize=None)
def elementary_symmetric(n, k):
    """The ``k``-th elementary symmetric polynomial in ``n`` variables.

    >>> sorted(elementary_symmetric(3, 2).terms)
    [(0, 1, 1), (1, 0, 1), (1, 1, 0)]
    """
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"variable count must be a positive integer, got {n!r}")
    if not 1 <= k <= n:
        raise ValueError(f"k must lie in 1..{n}, got {k}")
    terms = {}
    for idx in combinations(range(n), k):
        nu = [0] * n
        for i in idx:
            nu[i] = 1
        terms[tuple(nu)] = Fraction(1)
    return Polynomial._trusted(n, terms)


def _swap(nu, i):
    nu = list(nu)
    nu[i], nu[i + 1] = nu[i + 1], nu[i]
    return tuple(nu)


def symmetry_witness(f):
    """Return ``None`` if ``f`` is symmetric, else ``((i, j), nu)``.

    ``(i, j)`` is a 1-based adjacent transposition and ``nu`` an exponent
    with ``f[nu] != f[swap(nu)]``. Adjacent transpositions generate the
    symmetric group, so checking them is enough.
    """
    terms = f.terms
    for nu in sorted(terms, key=lambda e: (degree(e), tuple(-x for x in e))):
        c = terms[nu]
        for i in range(f.n - 1):
            if nu[i] == nu[i + 1]:
                continue
            if terms.get(_swap(nu, i), 0) != c:
                return (i + 1, i + 2), nu
    return None


def is_symmetric(f):
    return symmetry_witness(f) is None


def sigma_power(n, lam):
    """``prod_i (sigma^i)^{lam_i}`` as a polynomial in ``x``."""
    return _sigma_power(n, tuple(lam))


@lru_cache(maxsize=4096)
def _sigma_power(n, lam):
    result = Polynomial.constant(n, 1)
    for i, e in enumerate(lam, start=1):
        if e:
            result = result * elementary_symmetric(n, i) ** e
    return result


def compose_with_sigma(g, n):
    """Expand ``g(sigma^1(x), ..., sigma^n(x))``."""
    if g.n != n:
        raise ValueError(f"g has {g.n} variables, expected {n}")
    out = {}
    for lam, c in g.terms.items():
        for nu, a in sigma_power(n, lam).terms.items():
            out[nu] = out.get(nu, 0) + c * a
    return Polynomial._trusted(n, {k: v for k, v in out.items() if v})
