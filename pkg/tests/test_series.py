import json
import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from cobweb.fnomial import f_factorial, f_nomial
from cobweb.fseq import parse_sequence
from cobweb.series import (
    FormalSeries,
    QBellContext,
    bell_f,
    count_invertible_matrices,
    decomposition_oracle,
    enumerate_subspaces,
    enumerator_coeff_by_partitions,
    exp_f_series,
    gl_order,
    prefab_enumerator,
    q_bell,
    q_stirling,
    series_add,
    series_exp,
    series_mul,
)
from oracles import count_set_partitions

NAT = parse_sequence("natural")
FIB = parse_sequence("fibonacci")


def F(*values):
    return FormalSeries.from_coefficients(values)


def test_series_basics():
    s = F(0, 1, 2)
    assert s.order == 2
    assert s.coefficient(2) == 2
    with pytest.raises(ValueError):
        s.coefficient(3)
    assert s.truncate(1).coeffs == (Fraction(0), Fraction(1))
    with pytest.raises(ValueError):
        s.truncate(5)
    with pytest.raises(ValueError):
        FormalSeries(())


def test_arithmetic_truncates_to_smaller_order():
    a = F(1, 2, 3, 4)
    b = F(1, 1)
    assert series_add(a, b).coeffs == (Fraction(2), Fraction(3))
    assert series_mul(a, b).coeffs == (Fraction(1), Fraction(3))
    assert (a - 1).coeffs[0] == 0
    assert (a + Fraction(1, 2)).coeffs[0] == Fraction(3, 2)


def test_exp_of_zero_is_one():
    assert series_exp(F(0, 0, 0)).coeffs == (Fraction(1), Fraction(0), Fraction(0))


def test_exp_of_x_gives_reciprocal_factorials():
    s = series_exp(F(*([0, 1] + [0] * 9)))
    assert [c for c in s.coeffs] == [Fraction(1, math.factorial(n)) for n in range(11)]


def test_exp_requires_zero_constant_term():
    with pytest.raises(ValueError):
        series_exp(F(1, 1))


@settings(max_examples=60, deadline=None)
@given(
    st.lists(st.fractions(max_denominator=6), min_size=10, max_size=10),
    st.lists(st.fractions(max_denominator=6), min_size=10, max_size=10),
)
def test_exp_turns_addition_into_multiplication(a_tail, b_tail):
    a = FormalSeries.from_coefficients([0] + a_tail)
    b = FormalSeries.from_coefficients([0] + b_tail)
    assert series_exp(series_add(a, b)) == series_mul(series_exp(a), series_exp(b))


@pytest.mark.parametrize(
    "spec",
    ["natural", "even", "mult:3", "fibonacci", "gauss:2", "const:2", "bg:2"],
)
def test_exp_f_coefficients(spec):
    Fs = parse_sequence(spec)
    series = exp_f_series(Fs, 30)
    for n in range(31):
        assert series.coefficient(n) == Fraction(1, f_factorial(Fs, n))


def test_exp_f_examples():
    assert exp_f_series(FIB, 5).coeffs == (
        Fraction(1),
        Fraction(1),
        Fraction(1),
        Fraction(1, 2),
        Fraction(1, 6),
        Fraction(1, 30),
    )
    assert exp_f_series(NAT, 8) == series_exp(
        FormalSeries.from_coefficients([0, 1] + [0] * 7)
    )
    assert all(c == 1 for c in exp_f_series(parse_sequence("const:1"), 4).coeffs)


def test_enumerator_against_partition_sum():
    for spec in ("natural", "even", "fibonacci", "gauss:2", "const:3"):
        Fs = parse_sequence(spec)
        enum = prefab_enumerator(Fs, 10)
        for n in range(11):
            assert enum.coefficient(n) == enumerator_coeff_by_partitions(Fs, n)


def test_enumerator_examples():
    assert prefab_enumerator(NAT, 0).coeffs == (Fraction(1),)
    assert prefab_enumerator(FIB, 3).coefficient(3) == Fraction(5, 3)
    scaled = [
        prefab_enumerator(NAT, 5).coefficient(n) * math.factorial(n) for n in range(6)
    ]
    assert scaled == [1, 1, 2, 5, 15, 52]


def test_enumerator_coefficients_nonnegative_for_positive_sequences():
    for spec in ("natural", "even", "fibonacci", "gauss:2", "const:2"):
        enum = prefab_enumerator(parse_sequence(spec), 20)
        assert all(c >= 0 for c in enum.coeffs)


def test_bell_reduction_to_set_partitions():
    for n in range(9):
        assert bell_f(NAT, n) == count_set_partitions(n)


def test_bell_examples():
    assert bell_f(NAT, 4) == 15
    assert bell_f(NAT, 5) == 52
    assert bell_f(FIB, 0) == 1
    assert bell_f(parse_sequence("gauss:3"), 0) == 1
    with pytest.raises(ValueError):
        bell_f(NAT, -1)


def test_gl_order_values_and_oracle():
    assert gl_order(2, 2) == 6
    assert gl_order(2, 3) == 168
    assert gl_order(5, 0) == 1
    for q in (2, 3):
        for n in range(4):
            assert gl_order(q, n) == count_invertible_matrices(q, n)
    with pytest.raises(ValueError):
        gl_order(1, 2)


def test_bg_factorials_agree_with_gl_orders():
    for q in (2, 3):
        bg = parse_sequence(f"bg:{q}")
        for n in range(7):
            assert f_factorial(bg, n) == gl_order(q, n)


def test_qbell_context_table():
    ctx = QBellContext(2, 3)
    assert ctx.gamma_factorials == (1, 1, 6, 168)
    with pytest.raises(ValueError):
        QBellContext(4, 2)


def test_q_bell_values_and_oracle():
    expected = {(2, 1): 1, (2, 2): 4, (2, 3): 57, (3, 1): 1, (3, 2): 7}
    for (q, n), value in expected.items():
        assert q_bell(q, n) == value
        assert decomposition_oracle(q, n) == value


def test_q_bell_dimension_four_cross_check():
    # both routes at the oracle's guard boundary
    assert q_bell(2, 4) == decomposition_oracle(2, 4) == 2921


def test_q_stirling_values_and_sum():
    assert [q_stirling(2, 3, k) for k in (1, 2, 3)] == [1, 28, 28]
    for q, n in ((2, 2), (2, 3), (3, 2)):
        assert sum(q_stirling(q, n, k) for k in range(1, n + 1)) == q_bell(q, n)


def test_q_bell_rejects_bad_input():
    with pytest.raises(ValueError):
        q_bell(4, 2)  # composite
    with pytest.raises(ValueError):
        q_bell(9, 2)  # prime power, not prime
    with pytest.raises(ValueError):
        q_bell(2, 0)
    with pytest.raises(ValueError):
        q_stirling(2, 3, 0)
    with pytest.raises(ValueError):
        q_stirling(2, 3, 4)


def test_decomposition_oracle_guard():
    with pytest.raises(ValueError):
        decomposition_oracle(2, 5)
    with pytest.raises(ValueError):
        decomposition_oracle(6, 2)
    assert decomposition_oracle(2, 1) == 1


def test_subspace_counts_match_gaussian_binomials():
    for q in (2, 3):
        gauss = parse_sequence(f"gauss:{q}")
        for n in range(4):
            spaces = enumerate_subspaces(q, n)
            by_dim: dict[int, int] = {}
            for s in spaces:
                by_dim[len(s)] = by_dim.get(len(s), 0) + 1
            for d in range(n + 1):
                assert by_dim.get(d, 0) == f_nomial(gauss, n, d).value
            assert len(spaces) == len(set(spaces))


def test_matrix_enumeration_guard():
    with pytest.raises(ValueError):
        count_invertible_matrices(2, 4)


def test_series_json():
    assert json.loads(exp_f_series(FIB, 3).to_json()) == ["1", "1", "1", "1/2"]
