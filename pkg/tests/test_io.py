import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from symdecomp.io import (
    PolySource,
    PolySyntaxError,
    VariableOutOfRange,
    ZeroDenominator,
    export_records,
    format_poly,
    parse_poly,
    parse_records,
    records_to_text,
)
from symdecomp.poly import Polynomial

from conftest import random_poly

EXAMPLE_ONE = Polynomial(2, {(1, 0): 1, (0, 1): 1, (2, 0): 3, (0, 2): 3, (1, 1): -5})
G_ONE = Polynomial(2, {(1, 0): 1, (2, 0): 3, (0, 1): -11})


class TestParse:
    def test_example_one(self):
        src = PolySource("x1 + x2 + 3*x1^2 + 3*x2^2 - 5*x1*x2", 2)
        assert parse_poly(src) == EXAMPLE_ONE

    def test_zero(self):
        assert parse_poly("0", 3) == Polynomial.zero(3)

    def test_rational(self):
        p = parse_poly("1/2*x1^2*x2 - x3", 3)
        assert dict(p.terms) == {(2, 1, 0): Fraction(1, 2), (0, 0, 1): -1}

    def test_like_terms_and_whitespace(self):
        assert parse_poly(" x1*x1 +2 * x1 ^ 2 -x1^2 ", 1) == Polynomial(1, {(2,): 2})

    def test_leading_sign_and_constant(self):
        assert parse_poly("-3/4 + x1", 1) == Polynomial(1, {(0,): Fraction(-3, 4), (1,): 1})

    def test_y_variables(self):
        assert parse_poly("y1 + 3*y1^2 - 11*y2", 2, var="y") == G_ONE

    @pytest.mark.parametrize("text, pos", [
        ("3x1", 1),
        ("x1 +", 4),
        ("x1 ** 2", 4),
        ("x1 + * x2", 5),
        ("x1 $ x2", 3),
        ("x1^", 3),
        ("2/", 2),
        ("x1 x2", 3),
    ])
    def test_syntax_errors(self, text, pos):
        with pytest.raises(PolySyntaxError) as info:
            parse_poly(text, 2)
        assert info.value.pos == pos

    def test_wrong_letter(self):
        with pytest.raises(PolySyntaxError):
            parse_poly("y1", 2)

    def test_variable_out_of_range(self):
        with pytest.raises(VariableOutOfRange) as info:
            parse_poly("x1 + x4", 3)
        assert (info.value.index, info.value.n) == (4, 3)

    def test_zero_denominator(self):
        with pytest.raises(ZeroDenominator):
            parse_poly("1/0*x1", 1)


class TestFormat:
    def test_decomposition(self):
        assert format_poly(G_ONE, "y") == "y1 + 3*y1^2 - 11*y2"

    def test_zero(self):
        assert format_poly(Polynomial.zero(2)) == "0"

    def test_negative_fraction(self):
        assert format_poly(Polynomial(2, {(1, 1): Fraction(-1, 2)})) == "-1/2*x1*x2"

    def test_degree_order(self):
        assert format_poly(EXAMPLE_ONE) == "x1 + x2 + 3*x1^2 - 5*x1*x2 + 3*x2^2"

    def test_bad_prefix(self):
        with pytest.raises(ValueError):
            format_poly(G_ONE, "z")

    def test_round_trip_random(self):
        rng = random.Random(7)
        for _ in range(300):
            n = rng.randint(1, 4)
            p = random_poly(rng, n, 8)
            for var in ("x", "y"):
                text = format_poly(p, var)
                assert parse_poly(text, n, var=var) == p
                assert format_poly(p, var) == text

    @settings(max_examples=100)
    @given(st.dictionaries(st.tuples(st.integers(0, 4), st.integers(0, 4)),
                           st.fractions(max_denominator=10**6).filter(
                               lambda c: abs(c.numerator) <= 10**6), max_size=6))
    def test_round_trip_property(self, terms):
        p = Polynomial(2, terms)
        assert parse_poly(format_poly(p), 2) == p


class TestRecords:
    def test_decomposition(self):
        assert export_records(G_ONE, "weight") == [("1 0", 1, 1), ("2 0", 3, 1), ("0 1", -11, 1)]

    def test_zero(self):
        assert export_records(Polynomial.zero(2)) == []

    def test_unit(self):
        assert export_records(Polynomial(2, {(1, 1): 1})) == [("1 1", 1, 1)]

    def test_text_round_trip(self):
        p = Polynomial(3, {(2, 1, 0): Fraction(-7, 3), (0, 0, 0): 5})
        text = records_to_text(export_records(p))
        assert text == "0 0 0,5,1\n2 1 0,-7,3\n"
        assert parse_records(text, 3) == p

    def test_bad_record(self):
        with pytest.raises(ValueError):
            parse_records("1 0,1\n", 2)
