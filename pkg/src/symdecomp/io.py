"""Reading and writing polynomials as text.

Grammar (whitespace between tokens is ignored)::

    poly   := [sign] term (sign term)*
    term   := coeff ('*' factor)* | factor ('*' factor)*
    coeff  := INT ['/' INT]
    factor := VAR INT ['^' INT]           e.g. x3, x1^2

``VAR`` is the variable letter (``x`` for inputs, ``y`` for decompositions).
Implicit multiplication such as ``3x1`` is rejected.

Terms are printed by ascending grade, then by exponent lexicographically
descending. The grade is the total degree for ``x`` polynomials and the
weight for ``y`` polynomials, so ``g`` is listed in the order its
coefficients are solved for.
"""

import re
from dataclasses import dataclass
from fractions import Fraction

from symdecomp.poly import Polynomial, degree, weight


class PolySyntaxError(ValueError):
    def __init__(self, text, pos, expected):
        self.text = text
        self.pos = pos
        self.expected = expected
        found = repr(text[pos]) if pos < len(text) else "end of input"
        super().__init__(f"at position {pos}: expected {expected}, found {found}")


class VariableOutOfRange(ValueError):
    def __init__(self, index, n):
        self.index = index
        self.n = n
        super().__init__(f"variable index {index} is outside 1..{n}")


class ZeroDenominator(ZeroDivisionError):
    def __init__(self, pos):
        self.pos = pos
        super().__init__(f"zero denominator at position {pos}")


@dataclass(frozen=True)
class PolySource:
    text: str
    n: int


_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<var>[a-z]\d+)|(?P<op>[-+*/^]))")


def _tokenize(text):
    pos = 0
    tokens = []
    end = len(text.rstrip())
    while pos < end:
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            start = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise PolySyntaxError(text, start, "a number, variable or operator")
        kind = m.lastgroup
        tokens.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text, n, var):
        self.text = text
        self.n = n
        self.var = var
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def at_op(self, op):
        kind, value, _ = self.tokens[self.i]
        return kind == "op" and value == op

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, expected):
        raise PolySyntaxError(self.text, self.peek()[2], expected)

    def parse(self):
        terms = {}
        sign = 1
        kind, value, _ = self.peek()
        if kind == "op" and value in "+-":
            self.take()
            sign = -1 if value == "-" else 1
        while True:
            nu, c = self.term()
            terms[nu] = terms.get(nu, 0) + sign * c
            kind, value, _ = self.peek()
            if kind == "end":
                break
            if kind == "op" and value in "+-":
                self.take()
                sign = -1 if value == "-" else 1
                continue
            self.fail("'+', '-' or end of input")
        return Polynomial(self.n, terms)

    def term(self):
        exps = [0] * self.n
        kind, _, _ = self.peek()
        if kind == "int":
            coeff = self.coeff()
            if self.peek()[0] == "var":
                self.fail("'*' between coefficient and variable")
            if not self.at_op("*"):
                return tuple(exps), coeff
            self.take()
            self.factor(exps)
        elif kind == "var":
            coeff = Fraction(1)
            self.factor(exps)
        else:
            self.fail("a coefficient or variable")
        while self.at_op("*"):
            self.take()
            self.factor(exps)
        if self.peek()[0] in ("var", "int"):
            self.fail("'*', '+', '-' or end of input")
        return tuple(exps), coeff

    def coeff(self):
        _, num, _ = self.take()
        if self.at_op("/"):
            self.take()
            kind, den, pos = self.peek()
            if kind != "int":
                self.fail("a denominator")
            self.take()
            if int(den) == 0:
                raise ZeroDenominator(pos)
            return Fraction(int(num), int(den))
        return Fraction(int(num))

    def factor(self, exps):
        kind, value, _ = self.peek()
        if kind != "var" or value[0] != self.var:
            self.fail(f"a variable {self.var}<k>")
        self.take()
        index = int(value[1:])
        if not 1 <= index <= self.n:
            raise VariableOutOfRange(index, self.n)
        power = 1
        if self.at_op("^"):
            self.take()
            kind, value, _ = self.peek()
            if kind != "int":
                self.fail("an integer exponent")
            self.take()
            power = int(value)
        exps[index - 1] += power


def parse_poly(src, n=None, var="x"):
    """Parse ``src`` (a :class:`PolySource` or a string with ``n`` given).

    >>> p = parse_poly("1/2*x1^2*x2 - x3", 3)
    >>> dict(p.terms) == {(2, 1, 0): Fraction(1, 2), (0, 0, 1): -1}
    True
    """
    if isinstance(src, PolySource):
        text, n = src.text, src.n
    else:
        text = src
    if n is None:
        raise ValueError("the variable count n is required")
    return _Parser(text, n, var).parse()


def ordered_terms(p, grading="degree"):
    """Terms of ``p`` by ascending grade, then exponent lex-descending."""
    grade = weight if grading == "weight" else degree
    return sorted(p.terms.items(),
                  key=lambda item: (grade(item[0]), tuple(-e for e in item[0])))


def _monomial_text(nu, var):
    factors = []
    for i, e in enumerate(nu, start=1):
        if e == 1:
            factors.append(f"{var}{i}")
        elif e > 1:
            factors.append(f"{var}{i}^{e}")
    return "*".join(factors)


def format_poly(p, var_prefix="x", grading=None):
    """Render ``p`` in the input grammar; ``parse_poly`` inverts it.

    >>> format_poly(Polynomial(2, {(1, 0): 1, (2, 0): 3, (0, 1): -11}), "y")
    'y1 + 3*y1^2 - 11*y2'
    """
    if var_prefix not in ("x", "y"):
        raise ValueError(f"variable prefix must be 'x' or 'y', got {var_prefix!r}")
    if grading is None:
        grading = "weight" if var_prefix == "y" else "degree"
    if p.is_zero():
        return "0"
    pieces = []
    for k, (nu, c) in enumerate(ordered_terms(p, grading)):
        mono = _monomial_text(nu, var_prefix)
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if k == 0:
            pieces.append(body if c > 0 else "-" + body)
        else:
            pieces.append((" + " if c > 0 else " - ") + body)
    return "".join(pieces)


def export_records(p, grading="degree"):
    """One ``(exponent text, numerator, denominator)`` record per term."""
    return [(" ".join(str(e) for e in nu), c.numerator, c.denominator)
            for nu, c in ordered_terms(p, grading)]


def records_to_text(records):
    return "".join(f"{exps},{num},{den}\n" for exps, num, den in records)


def parse_records(text, n):
    """Inverse of :func:`records_to_text`."""
    terms = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            exps, num, den = line.split(",")
            nu = tuple(int(e) for e in exps.split())
            terms[nu] = Fraction(int(num), int(den))
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"bad record on line {lineno}: {line!r}") from exc
    return Polynomial(n, terms)
