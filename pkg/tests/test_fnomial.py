import json
import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from cobweb.fnomial import (
    FNomialValue,
    f_factorial,
    f_nomial,
    f_nomial_from_factorials,
    f_nomial_triangle,
    falling_f,
    triangle_to_csv,
    triangle_to_json,
)
from cobweb.fseq import parse_sequence

FIB = parse_sequence("fibonacci")
NAT = parse_sequence("natural")
SPECS = ["natural", "even", "mult:3", "fibonacci", "gauss:2", "const:4"]


def test_factorials():
    assert f_factorial(FIB, 5) == 30
    assert f_factorial(FIB, 0) == 1
    assert f_factorial(NAT, 6) == 720
    with pytest.raises(ValueError):
        f_factorial(NAT, -1)


def test_falling_products():
    assert falling_f(FIB, 4, 2) == 6
    assert falling_f(FIB, 9, 0) == 1
    assert falling_f(NAT, 5, 3) == 60
    with pytest.raises(ValueError):
        falling_f(NAT, 3, 4)


def test_coefficient_values():
    assert f_nomial(FIB, 5, 2).value == 15
    assert f_nomial(FIB, 5, 2).is_integral
    assert f_nomial(NAT, 4, 2).value == 6
    assert f_nomial(parse_sequence("gauss:2"), 4, 2).value == 35
    assert f_nomial(NAT, 0, 0).value == 1


def test_coefficient_range_errors():
    with pytest.raises(ValueError):
        f_nomial(NAT, 3, 4)
    with pytest.raises(ValueError):
        f_nomial(NAT, 3, -1)


def test_non_integral_coefficient_is_returned_not_raised():
    value = f_nomial(parse_sequence("custom:2,3"), 2, 1)
    assert not value.is_integral
    assert value.value == Fraction(3, 2)
    assert str(value) == "3/2"


def test_triangle_rows():
    rows = f_nomial_triangle(FIB, 5)
    assert [[v.value for v in row] for row in rows] == [
        [1],
        [1, 1],
        [1, 1, 1],
        [1, 2, 2, 1],
        [1, 3, 6, 3, 1],
    ]
    pascal = f_nomial_triangle(NAT, 4)
    assert [[v.value for v in row] for row in pascal] == [
        [1],
        [1, 1],
        [1, 2, 1],
        [1, 3, 3, 1],
    ]
    flat = f_nomial_triangle(parse_sequence("const:3"), 4)
    assert all(v.value == 1 for row in flat for v in row)
    assert f_nomial_triangle(NAT, 0) == []


def test_triangle_exports():
    rows = f_nomial_triangle(FIB, 4)
    assert triangle_to_csv(rows) == "1\n1,1\n1,1,1\n1,2,2,1\n"
    assert json.loads(triangle_to_json(rows)) == [
        ["1"],
        ["1", "1"],
        ["1", "1", "1"],
        ["1", "2", "2", "1"],
    ]


def test_value_validation():
    with pytest.raises(ValueError):
        FNomialValue(4, 2)
    with pytest.raises(ValueError):
        FNomialValue(1, -1)
    assert FNomialValue.from_fraction(Fraction(6, 4)).denominator == 2


@settings(max_examples=150, deadline=None)
@given(
    st.sampled_from(SPECS),
    st.integers(min_value=0, max_value=20),
    st.data(),
)
def test_symmetry_and_quotient_identity(spec, n, data):
    F = parse_sequence(spec)
    k = data.draw(st.integers(min_value=0, max_value=n))
    left = f_nomial(F, n, k).value
    assert left == f_nomial(F, n, n - k).value
    assert left * f_factorial(F, k) == falling_f(F, n, k)
    assert left == f_nomial_from_factorials(F, n, k).value


def test_symmetry_and_quotient_exhaustive_to_30():
    for F in (FIB, parse_sequence("gauss:2")):
        for n in range(31):
            for k in range(n + 1):
                value = f_nomial(F, n, k).value
                assert value == f_nomial(F, n, n - k).value
                assert value * f_factorial(F, k) == falling_f(F, n, k)


def test_binomial_reduction():
    for n in range(21):
        for k in range(n + 1):
            assert f_nomial(NAT, n, k).value == math.comb(n, k)


def test_multiple_cancellation():
    for c in (2, 3, 7):
        F = parse_sequence(f"mult:{c}")
        for n in range(21):
            for k in range(n + 1):
                assert f_nomial(F, n, k).value == f_nomial(NAT, n, k).value
