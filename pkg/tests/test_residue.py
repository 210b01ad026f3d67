import math

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from nihoperm.errors import FractionError
from nihoperm.residue import (
    coprime_2k_minus_1,
    coprime_2k_plus_1,
    frac_to_residue,
    is_normalized_niho,
    niho_pair,
    parse_fraction,
)


def ext_euclid_inverse(a, mod):
    old_r, r, old_s, s = a % mod, mod, 1, 0
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
    assert old_r == 1
    return old_s % mod


@pytest.mark.parametrize("m", range(2, 12))
def test_half(m):
    assert frac_to_residue(1, 2, m) == (1 << (m - 1)) + 1


def test_three_quarters_m3():
    assert ext_euclid_inverse(4, 9) == 7
    assert frac_to_residue(3, 4, 3) == 3 * 7 % 9 == 3 == (1 << 1) + 1


def test_minus_one():
    assert frac_to_residue(-1, 1, 3) == 8


def test_noninvertible():
    with pytest.raises(FractionError):
        frac_to_residue(1, 3, 3)
    with pytest.raises(FractionError):
        frac_to_residue(1, 0, 3)


def test_niho_pair_examples():
    p = niho_pair(2, -1, 3)
    assert (p.s, p.t, p.exp_s, p.exp_t) == (2, 8, 15, 57)
    q = niho_pair(1, 1, 2)
    assert q.exp_s == q.exp_t == 4
    r = niho_pair("1/2", "3/4", 4)
    assert ext_euclid_inverse(2, 17) == 9 and ext_euclid_inverse(4, 17) == 13
    assert (r.s, r.t) == (9, 5) == ((1 << 3) + 1, (1 << 2) + 1)


@pytest.mark.parametrize(
    "text, expected",
    [("3", (3, 1)), ("-1", (-1, 1)), ("4/3", (4, 3)), ("-1/3", (-1, 3)), (" +2 / 5 ", (2, 5)),
     ("1/-3", (1, -3))],
)
def test_parse_fraction(text, expected):
    assert parse_fraction(text) == expected


@pytest.mark.parametrize("text", ["", "1/", "/3", "a", "1.5", "1/0", "1//2"])
def test_parse_fraction_rejects(text):
    with pytest.raises(FractionError):
        parse_fraction(text)


def test_unreduced_literal_is_strict():
    # 3/3 is undefined mod 9 even though it reduces to 1
    with pytest.raises(FractionError):
        niho_pair("3/3", 1, 3)


@given(st.integers(2, 20), st.integers(-10**6, 10**6), st.integers(-10**6, 10**6))
def test_residue_solves_congruence(m, u, v):
    mod = (1 << m) + 1
    assume(v != 0 and math.gcd(v, mod) == 1)
    res = frac_to_residue(u, v, m)
    assert 0 <= res <= 1 << m
    assert (res * v - u) % mod == 0
    assert res == u * ext_euclid_inverse(v, mod) % mod


@given(st.integers(2, 20), st.integers(-1000, 1000), st.integers(1, 1000), st.integers(1, 1000))
def test_fraction_well_defined(m, u, v, a):
    mod = (1 << m) + 1
    assume(math.gcd(a, mod) == 1 and math.gcd(v, mod) == 1)
    assert frac_to_residue(a * u, a * v, m) == frac_to_residue(u, v, m)


@given(st.integers(2, 16), st.integers(0, 1 << 16), st.integers(0, 1 << 16))
def test_niho_exponents_normalized(m, s, t):
    s %= (1 << m) + 1
    t %= (1 << m) + 1
    p = niho_pair(s, t, m)
    assert p.exp_s % ((1 << m) - 1) == 1 % ((1 << m) - 1)
    assert is_normalized_niho(p.exp_t, m)


def test_coprime_examples():
    assert all(coprime_2k_minus_1(1, m) for m in range(1, 10))
    assert not coprime_2k_minus_1(2, 3)
    assert coprime_2k_minus_1(2, 2)
    assert coprime_2k_plus_1(1, 2)
    assert not coprime_2k_plus_1(1, 3)
    assert math.gcd(5, 17) == 1
    assert coprime_2k_plus_1(2, 4)


def test_coprime_predicates_exhaustive():
    # each call raises ConsistencyError if the closed form disagrees with the gcd
    for k in range(1, 31):
        for m in range(1, 31):
            assert coprime_2k_minus_1(k, m) == (math.gcd(2**k - 1, 2**m + 1) == 1)
            assert coprime_2k_plus_1(k, m) == (math.gcd(2**k + 1, 2**m + 1) == 1)
