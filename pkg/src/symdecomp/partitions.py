"""Orbit representatives of exponents under permuting the variables.

A class of exponents is represented by its non-increasing rearrangement.
Degree-``d`` classes in ``n`` variables are the partitions of ``d`` into at
most ``n`` parts, and the difference map :func:`phi` sends them bijectively
onto the exponents of weight ``d``.
"""

from itertools import permutations


def canonicalize(nu):
    """Non-increasing rearrangement of ``nu``.

    >>> canonicalize((1, 2, 1))
    (2, 1, 1)
    """
    return tuple(sorted(nu, reverse=True))


def is_canonical(nu):
    return all(a >= b for a, b in zip(nu, nu[1:]))


def orbit(rep):
    """All distinct rearrangements of ``rep``, as a set."""
    return set(permutations(rep))


def phi(rep):
    """Successive differences ``(r1-r2, ..., r_{n-1}-r_n, r_n)``.

    >>> phi((2, 1, 1))
    (1, 0, 1)
    """
    if not is_canonical(rep):
        raise ValueError(f"{rep!r} is not non-increasing")
    rep = tuple(rep)
    return tuple(a - b for a, b in zip(rep, rep[1:] + (0,)))


def phi_inv(lam):
    """Suffix sums of ``lam``; the inverse of :func:`phi`."""
    out = []
    acc = 0
    for e in reversed(lam):
        acc += e
        out.append(acc)
    return tuple(reversed(out))


def degree_classes(n, d):
    """Partitions of ``d`` into at most ``n`` parts, lexicographically descending.

    The first entry is ``(d, 0, ..., 0)``; this is the row order of each
    degree system.

    >>> degree_classes(3, 4)
    [(4, 0, 0), (3, 1, 0), (2, 2, 0), (2, 1, 1)]
    """
    if n < 1 or d < 0:
        raise ValueError(f"need n >= 1 and d >= 0, got n={n}, d={d}")
    out = []

    def descend(prefix, remaining, cap, slots):
        if slots == 0:
            if remaining == 0:
                out.append(tuple(prefix))
            return
        # largest part first gives lexicographically descending output
        for part in range(min(remaining, cap), -1, -1):
            if remaining - part > part * (slots - 1):
                break
            prefix.append(part)
            descend(prefix, remaining - part, part, slots - 1)
            prefix.pop()

    descend([], d, d, n)
    return out


def weight_vectors(n, d):
    """Exponents of weight ``d`` in system column order."""
    return [phi(c) for c in degree_classes(n, d)]

