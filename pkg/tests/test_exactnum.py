import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from quotientrule.exactnum import (
    binomial,
    factorial,
    format_rat,
    multinomial,
    parse_rat,
    parse_rat_list,
)

from conftest import small_rationals


@pytest.mark.parametrize("n,expected", [(0, 1), (1, 1), (5, 120)])
def test_factorial(n, expected):
    assert factorial(n) == expected


def test_factorial_large_is_exact():
    assert factorial(30) == 265252859812191058636308480000000


def test_factorial_rejects_negative():
    with pytest.raises(ValueError):
        factorial(-1)


@pytest.mark.parametrize("n,k,expected", [(1, 2, 0), (5, 0, 1), (5, 2, 10), (5, -1, 0), (0, 0, 1)])
def test_binomial(n, k, expected):
    assert binomial(n, k) == expected


@pytest.mark.parametrize("n", range(21))
def test_binomial_row_sums_to_power_of_two(n):
    assert sum(binomial(n, k) for k in range(n + 1)) == 2**n


@pytest.mark.parametrize("parts,expected", [([], 1), ([2, 1], 3), ([1, 1], 2), ([0, 0], 1), ([3], 1)])
def test_multinomial(parts, expected):
    assert multinomial(parts) == expected


@given(st.lists(st.integers(0, 6), max_size=6))
def test_multinomial_matches_factorial_ratio(parts):
    expected = math.factorial(sum(parts))
    for p in parts:
        expected //= math.factorial(p)
    assert multinomial(parts) == expected


@given(st.lists(st.integers(0, 6), max_size=6))
def test_multinomial_is_product_of_successive_binomials(parts):
    prod, running = 1, 0
    for p in parts:
        running += p
        prod *= binomial(running, p)
    assert multinomial(parts) == prod


def test_multinomial_rejects_negative():
    with pytest.raises(ValueError):
        multinomial([2, -1])


@given(small_rationals, small_rationals, small_rationals)
def test_rational_field_laws(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a + b == b + a and a * b == b * a
    assert a * (b + c) == a * b + a * c


@given(small_rationals, small_rationals)
def test_canonical_form_after_arithmetic(a, b):
    for x in (a + b, a - b, a * b):
        assert x.denominator > 0
        assert math.gcd(abs(x.numerator), x.denominator) == 1


@pytest.mark.parametrize("x,text", [(Fraction(-1, 6), "-1/6"), (Fraction(4, 2), "2"), (Fraction(0), "0"), (7, "7")])
def test_format_rat(x, text):
    assert format_rat(x) == text


@given(small_rationals)
def test_format_parse_round_trip(x):
    assert parse_rat(format_rat(x)) == x


def test_parse_rat_canonicalizes():
    assert parse_rat("2/4") == Fraction(1, 2)
    assert parse_rat("-3") == Fraction(-3)


@pytest.mark.parametrize("bad", ["1.5", "1e3", "1/0", "", "a/b", "1/-2"])
def test_parse_rat_rejects(bad):
    with pytest.raises(ValueError):
        parse_rat(bad)


def test_parse_rat_list():
    assert parse_rat_list("2,-1/3,0") == [Fraction(2), Fraction(-1, 3), Fraction(0)]
    with pytest.raises(ValueError):
        parse_rat_list("")
