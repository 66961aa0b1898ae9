from math import comb

import pytest

from qdelannoy.polyring import IntPoly, ONE, ZERO
from qdelannoy.qcore import (
    QBinomialTable,
    delannoy,
    delannoy_lucas_check,
    delannoy_series_table,
    is_prime,
    lucas_check,
    neg_q_pochhammer,
    q_binomial,
    q_binomial_theorem_check,
    q_integer,
    q_lucas_check,
)


# ---------------------------------------------------------------------------
# Oracles
# ---------------------------------------------------------------------------

def q_binomial_by_quotient(h, k):
    """Factorial-quotient form via exact division; independent of the recurrence."""
    if k < 0 or k > h:
        return ZERO
    num = ONE
    for i in range(h - k + 1, h + 1):
        num = num * q_integer(i)
    den = ONE
    for i in range(1, k + 1):
        den = den * q_integer(i)
    quot, rem = num.divrem(den)
    assert rem.is_zero()
    return quot


def q_binomial_second_recurrence(h, k, memo={}):
    """[h,k] = [h-1,k] + q^(h-k)*[h-1,k-1], the other Pascal-style recurrence."""
    if k < 0 or k > h:
        return ZERO
    if k == 0 or k == h:
        return ONE
    if (h, k) not in memo:
        memo[(h, k)] = q_binomial_second_recurrence(h - 1, k) + q_binomial_second_recurrence(
            h - 1, k - 1
        ).shift(h - k)
    return memo[(h, k)]


def delannoy_closed_form_1(h, k):
    return sum(comb(k, j) * comb(h + k - j, k) for j in range(h + 1))


def delannoy_closed_form_2(h, k):
    return sum(2**j * comb(k, j) * comb(h, j) for j in range(h + 1))


# ---------------------------------------------------------------------------
# q-integers and Pochhammer products
# ---------------------------------------------------------------------------

def test_q_integer():
    assert q_integer(0).is_zero()
    assert q_integer(1) == ONE
    assert q_integer(4) == IntPoly([1, 1, 1, 1])
    with pytest.raises(ValueError):
        q_integer(-1)


def test_neg_q_pochhammer():
    assert neg_q_pochhammer(0) == ONE
    assert neg_q_pochhammer(1) == IntPoly([1, 1])
    assert neg_q_pochhammer(2) == IntPoly([1, 1]) * IntPoly([1, 0, 1])
    assert neg_q_pochhammer(2) == IntPoly([1, 1, 1, 1])


def test_q_binomial_theorem_identity():
    for j in range(9):
        assert q_binomial_theorem_check(j)


# ---------------------------------------------------------------------------
# Gaussian binomials
# ---------------------------------------------------------------------------

def test_q_binomial_base_cases():
    assert q_binomial(5, 0) == ONE
    assert q_binomial(3, -1).is_zero()
    assert q_binomial(3, 4).is_zero()


def test_q_binomial_example():
    assert q_binomial(4, 2) == IntPoly([1, 1, 2, 1, 1])
    assert q_binomial(4, 2) == q_binomial_by_quotient(4, 2)


def test_q_binomial_matches_quotient_oracle():
    for h in range(13):
        for k in range(h + 1):
            assert q_binomial(h, k) == q_binomial_by_quotient(h, k)


def test_both_recurrences_agree():
    for h in range(21):
        for k in range(h + 1):
            assert q_binomial(h, k) == q_binomial_second_recurrence(h, k)


def test_q_binomial_specializes_to_binomial():
    for h in range(21):
        for k in range(-1, h + 2):
            expected = comb(h, k) if 0 <= k <= h else 0
            assert q_binomial(h, k).evaluate(1) == expected


def test_q_binomial_symmetry_and_degree():
    for h in range(21):
        for k in range(h + 1):
            p = q_binomial(h, k)
            assert p == q_binomial(h, h - k)
            assert p.degree == k * (h - k)
            assert all(c >= 0 for c in p.coeffs)


def test_q_binomial_rejects_negative_upper():
    with pytest.raises(ValueError):
        q_binomial(-1, 0)


def test_explicit_table():
    table = QBinomialTable()
    assert table.get(6, 3) == q_binomial(6, 3)


# ---------------------------------------------------------------------------
# Delannoy numbers
# ---------------------------------------------------------------------------

def test_delannoy_spot_values():
    assert delannoy(0, 0) == 1
    assert delannoy(1, 1) == 3
    assert delannoy(3, 3) == 63
    assert delannoy(-1, 2) == 0
    assert delannoy(4, 0) == 1


def test_delannoy_matches_both_closed_forms():
    for h in range(13):
        for k in range(13):
            d = delannoy(h, k)
            assert d == delannoy_closed_form_1(h, k)
            assert d == delannoy_closed_form_2(h, k)
            assert d == delannoy(k, h)


def test_series_table_matches_recurrence():
    assert delannoy_series_table(0) == [[1]]
    table = delannoy_series_table(12)
    assert table[2][2] == 13
    for h in range(13):
        assert table[h][0] == 1
        for k in range(13):
            assert table[h][k] == delannoy(h, k)


# ---------------------------------------------------------------------------
# Lucas-type congruence checks
# ---------------------------------------------------------------------------

def test_is_prime():
    assert [p for p in range(20) if is_prime(p)] == [2, 3, 5, 7, 11, 13, 17, 19]


def test_lucas_examples():
    assert lucas_check(3, 2, 1, 1, 1)
    assert lucas_check(2, 0, 1, 0, 0)
    assert lucas_check(5, 1, 0, 0, 3)


def test_lucas_rejects_bad_args():
    with pytest.raises(ValueError):
        lucas_check(4, 1, 0, 1, 0)
    with pytest.raises(ValueError):
        lucas_check(3, 1, 3, 1, 0)


def test_lucas_small_grid():
    for p in (2, 3, 5):
        for a in range(4):
            for c in range(4):
                for b in range(p):
                    for d in range(p):
                        assert lucas_check(p, a, b, c, d)
                        assert delannoy_lucas_check(p, a, b, c, d)


def test_delannoy_lucas_examples():
    assert delannoy(4, 4) == 321 and 321 % 3 == 0
    assert delannoy_lucas_check(3, 1, 1, 1, 1)
    for b in range(2):
        for d in range(2):
            assert delannoy_lucas_check(2, 0, b, 0, d)
    assert delannoy_lucas_check(5, 2, 0, 1, 0)


def test_q_lucas_examples():
    assert q_lucas_check(3, 1, 1, 0, 2)
    for b in range(5):
        for d in range(5):
            assert q_lucas_check(5, 0, b, 0, d)
    assert q_lucas_check(4, 1, 0, 1, 0)


def test_q_lucas_small_grid():
    for n in range(1, 7):
        for a in range(3):
            for c in range(3):
                for b in range(n):
                    for d in range(n):
                        assert q_lucas_check(n, a, b, c, d)
