import math

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nonoverlap.construct import construction_I, construction_II_prime
from nonoverlap.count import (
    CodeSizeProfile,
    EpsilonResult,
    IntPolynomial,
    RationalSeries,
    b_count_multinomial,
    b_count_recurrence,
    b_gf,
    construction_I_count,
    d_k_identity_check,
    epsilon_k,
    growth_rate,
    r_count,
    r_gf,
    s_count,
    s_gf,
    series_coefficients,
    u_count,
    u_gf,
    v_count,
    vcal_count,
    vcal_gf,
)
from nonoverlap.words import Bipartition
from oracles import avoiding_words, brute_R, brute_U, code


def naive_series(num, den, upto):
    """Power series num/den by schoolbook long division (lists of ints, den[0] == 1)."""
    assert den[0] == 1
    out = []
    for n in range(upto + 1):
        acc = num[n] if n < len(num) else 0
        acc -= sum(den[j] * out[n - j] for j in range(1, min(n, len(den) - 1) + 1))
        out.append(acc)
    return out


def poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def test_series_examples():
    geo = RationalSeries(IntPolynomial((1,)), IntPolynomial((1, -1)))
    assert series_coefficients(geo, 5) == [1] * 6
    fib = RationalSeries(IntPolynomial((0, 1)), IntPolynomial((1, -1, -1)))
    assert fib.coefficients(10) == [0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55]
    assert s_gf(1, 2, 2)[7] == 88


def test_series_rejects_bad_input():
    with pytest.raises(ValueError):
        RationalSeries(IntPolynomial((1,)), IntPolynomial((0, 1)))
    with pytest.raises(ValueError):
        series_coefficients(RationalSeries(IntPolynomial((1,)), IntPolynomial((2, 1))), 3)


def test_polynomial_arithmetic():
    p = IntPolynomial((1, 2))
    assert (p * p).coeffs == (1, 4, 4)
    assert (p - p).coeffs == ()
    assert IntPolynomial.monomial(3, 2).degree == 2


def test_u_and_s_examples():
    assert u_count(1, 1, 2, 4) == 3  # 1011, 1101, 1111
    assert s_count(1, 2, 2, 7) == 88
    assert s_count(3, 2, 2, 3) == 18
    assert construction_I_count(2, 2, 6) == 3
    assert construction_I_count(6, 1, 3) == 25


@pytest.mark.parametrize("isize,jsize", [(1, 1), (1, 2), (2, 1), (2, 2), (1, 3), (3, 1)])
def test_u_count_matches_brute_force(isize, jsize):
    for k in range(1, 4):
        for n in range(1, 8):
            assert u_count(isize, jsize, k, n) == len(brute_U(isize, jsize, k, n))
        assert u_gf(isize, jsize, k).coefficients(7)[1:] == [u_count(isize, jsize, k, n) for n in range(1, 8)]


@pytest.mark.parametrize("isize,jsize", [(1, 1), (1, 2), (2, 2), (2, 3), (3, 1)])
def test_s_is_shifted_u(isize, jsize):
    for k in range(1, 5):
        for n in range(k + 1, 25):
            assert s_count(isize, jsize, k, n) == isize ** k * u_count(isize, jsize, k, n - k)
        coeffs = s_gf(isize, jsize, k).coefficients(24)
        assert coeffs == [s_count(isize, jsize, k, n) for n in range(25)]


def test_s_vanishes_below_k_plus_one():
    for k in range(1, 5):
        assert all(s_count(2, 2, k, n) == 0 for n in range(0, k + 1))


def test_k_equals_one_collapse():
    # with k = 1 a word is one I-symbol followed by J-symbols only
    for isize, jsize in [(1, 1), (2, 3), (3, 3)]:
        for n in range(2, 12):
            assert s_count(isize, jsize, 1, n) == isize * jsize ** (n - 1)


@pytest.mark.parametrize("isize,jsize", [(1, 1), (1, 2), (2, 1), (2, 2)])
def test_r_count_matches_brute_force(isize, jsize):
    for k in range(2, 5):
        for n in range(0, 9):
            assert r_count(isize, jsize, k, n) == len(brute_R(isize, jsize, k, n))


def test_r_examples():
    assert r_count(1, 1, 3, 0) == 1
    assert r_count(1, 1, 3, 1) == 0
    assert [r_count(1, 1, 3, n) for n in range(2, 6)] == [1, 2, 2, 4]


@pytest.mark.parametrize("k", [2, 3, 4, 5, 6])
def test_binary_r_gf_closed_form(k):
    den = [0] * (2 * k + 1)
    den[0], den[1] = 1, -2
    den[k + 1] += 2
    den[2 * k] -= 1
    expected = naive_series([1, -2, 1], den, 40)
    assert r_gf(1, 1, k).coefficients(40) == expected
    assert [r_count(1, 1, k, n) for n in range(41)] == expected


@pytest.mark.parametrize("isize,jsize", [(1, 2), (2, 2), (3, 1)])
def test_r_gf_matches_recurrence(isize, jsize):
    for k in (2, 3, 4):
        assert r_gf(isize, jsize, k).coefficients(30) == [r_count(isize, jsize, k, n) for n in range(31)]


@pytest.mark.parametrize("k", [3, 4, 5, 6, 7])
def test_d_k_identity(k):
    assert d_k_identity_check(k, 40)


def test_v_examples():
    assert v_count(1, 1, 3, 8) == 1
    assert vcal_count(1, 1, 3, 10) == 5
    assert max(vcal_count(1, 2, 3, 10), vcal_count(2, 1, 3, 10)) == 128


@pytest.mark.parametrize("isize,jsize,k,n_max", [(1, 1, 3, 14), (1, 2, 3, 11), (2, 1, 3, 11), (1, 1, 4, 14)])
def test_vcal_count_matches_construction(isize, jsize, k, n_max):
    bp = Bipartition.canonical(isize + jsize, isize)
    for n in range(2 * k + 2, n_max + 1):
        assert vcal_count(isize, jsize, k, n) == len(construction_II_prime(n, bp, k))


@pytest.mark.parametrize("k", [3, 4, 5])
def test_binary_vcal_gf_closed_form(k):
    # x^{2k} (x - x^k)^2 / ((1 - x)(1 - x^k)(1 - 2x + x^k))
    inner = [0] * (k + 1)
    inner[1] += 1
    inner[k] -= 1
    num = [0] * (2 * k) + poly_mul(inner, inner)
    one_minus_xk = [1] + [0] * (k - 1) + [-1]
    tail = [1, -2] + [0] * (k - 2) + [1]
    den = poly_mul(poly_mul([1, -1], one_minus_xk), tail)
    expected = naive_series(num, den, 40)
    assert vcal_gf(1, 1, k).coefficients(40) == expected
    assert [vcal_count(1, 1, k, n) for n in range(2 * k + 2, 41)] == expected[2 * k + 2:]


@pytest.mark.parametrize("isize,jsize", [(1, 2), (2, 2)])
def test_vcal_gf_matches_counts(isize, jsize):
    for k in (3, 4):
        coeffs = vcal_gf(isize, jsize, k).coefficients(30)
        assert all(c == 0 for c in coeffs[:2 * k + 2])
        assert coeffs[2 * k + 2:] == [vcal_count(isize, jsize, k, n) for n in range(2 * k + 2, 31)]


def test_variable_count_parameter_checks():
    with pytest.raises(ValueError):
        v_count(1, 1, 3, 7)
    with pytest.raises(ValueError):
        vcal_count(1, 1, 2, 10)
    with pytest.raises(ValueError):
        r_count(1, 1, 1, 5)


def test_profile_validation():
    assert CodeSizeProfile(2, {8: 1, 9: 0}).sizes == {8: 1}
    with pytest.raises(ValueError):
        CodeSizeProfile(2, {1: 1})
    with pytest.raises(ValueError):
        CodeSizeProfile(2, {2: 5})
    prof = CodeSizeProfile.of(code(2, "11101000", "111011000", "111001000"))
    assert (prof.h, prof.n, prof.sizes) == (8, 9, {8: 1, 9: 2})
    assert prof.below(9).sizes == {8: 1}


def test_b_examples():
    prof = CodeSizeProfile(2, {2: 1})
    assert [b_count_recurrence(prof, m) for m in range(5)] == [1, 2, 3, 4, 5]
    assert b_count_recurrence(prof, -1) == 0
    empty = CodeSizeProfile(3)
    assert [b_count_multinomial(empty, m) for m in range(4)] == [1, 3, 9, 27]


@pytest.mark.parametrize("c", [
    code(2, "01"), code(2, "0011"), code(2, "001011", "001101", "001111"),
    code(2, "11101000", "111011000"), code(3, "01", "02"), code(3, "0012", "0021", "00112"),
])
def test_b_three_ways_and_brute_force(c):
    prof = CodeSizeProfile.of(c)
    gf = b_gf(prof).coefficients(12)
    for m in range(13):
        rec = b_count_recurrence(prof, m)
        assert rec == b_count_multinomial(prof, m) == gf[m]
        if m <= 9:
            assert rec == avoiding_words(c, m)


profiles = st.integers(2, 4).flatmap(
    lambda q: st.dictionaries(st.integers(2, 6), st.integers(0, 6), max_size=3).map(
        lambda d: CodeSizeProfile(q, {i: min(s, q ** i) for i, s in d.items()})
    )
)


@settings(max_examples=60)
@given(profiles)
def test_b_routes_agree_on_arbitrary_profiles(prof):
    # the three formulas are algebraically equal for any profile
    gf = b_gf(prof).coefficients(12)
    assert [b_count_recurrence(prof, m) for m in range(13)] == gf
    assert [b_count_multinomial(prof, m) for m in range(13)] == gf


def test_epsilon_two_is_golden():
    res = epsilon_k(2)
    assert isinstance(res, EpsilonResult)
    phi = (1 + math.sqrt(5)) / 2
    assert abs(float(res.epsilon) - (1 - phi / 2)) < 1e-12
    assert abs(float(res.y0) - phi) < 1e-12


def test_epsilon_decreasing_and_small():
    values = [epsilon_k(k).epsilon for k in range(2, 13)]
    assert all(a > b for a, b in zip(values, values[1:]))
    for k, e in zip(range(2, 13), values):
        assert 0 < e < mpmath.mpf(2) ** -k


def test_epsilon_root_is_a_root():
    for k in (2, 3, 5):
        y = epsilon_k(k).y0
        assert abs(y ** k - sum(y ** i for i in range(k))) < 1e-30


def test_epsilon_rejects_bad_arguments():
    with pytest.raises(ValueError):
        epsilon_k(1)
    with pytest.raises(ValueError):
        epsilon_k(3, tolerance=0)


def test_growth_rate():
    phi = (1 + math.sqrt(5)) / 2
    assert abs(float(growth_rate(2, 2)) - phi) < 1e-12
    assert abs(float(growth_rate(4, 2)) - 2 * phi) < 1e-12
    assert growth_rate(4, 4, "variable") == growth_rate(4, 3, "fixed")
    with pytest.raises(ValueError):
        growth_rate(3, 2)
    with pytest.raises(ValueError):
        growth_rate(4, 2, "other")
    with pytest.raises(ValueError):
        growth_rate(4, 2, "variable")


@pytest.mark.parametrize("q,k", [(2, 2), (4, 2), (2, 3), (4, 3)])
def test_observed_growth_ratio(q, k):
    a = q // 2
    ratio = s_count(a, a, k, 201) / s_count(a, a, k, 200)
    assert abs(ratio - float(growth_rate(q, k))) < 1e-3


def test_construction_I_count_matches_builder():
    for q in (2, 3):
        for n in range(2, 9):
            for k in range(1, n):
                assert construction_I_count(q, k, n) == len(construction_I(n, q, k))
