"""Exponent fractions modulo 2^m + 1 and Niho exponent pairs.

Pair parameters are written the way they appear in the literature, e.g.
``2``, ``-1``, ``4/3`` or ``-1/3``, and read as residues modulo 2^m + 1.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass

from .errors import ConsistencyError, FractionError

_FRACTION_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*([+-]?\d+))?\s*$")


def parse_fraction(text):
    """Parse ``"u/v"``, ``"-u/v"`` or ``"u"`` into an unreduced ``(num, den)`` tuple."""
    match = _FRACTION_RE.match(text)
    if not match:
        raise FractionError(f"cannot parse fraction {text!r}")
    num = int(match.group(1))
    den = int(match.group(2)) if match.group(2) is not None else 1
    if den == 0:
        raise FractionError(f"zero denominator in {text!r}")
    return num, den


def as_fraction(value):
    """Normalise a str / int / (num, den) literal into a ``(num, den)`` tuple.

    Tuples are deliberately not reduced to lowest terms: ``3/3`` is undefined
    modulo 9 even though it "equals" 1.
    """
    if isinstance(value, str):
        return parse_fraction(value)
    if isinstance(value, bool):
        raise FractionError(f"not a fraction literal: {value!r}")
    if isinstance(value, int):
        return value, 1
    if isinstance(value, tuple) and len(value) == 2:
        return int(value[0]), int(value[1])
    raise FractionError(f"not a fraction literal: {value!r}")


def format_fraction(frac):
    num, den = as_fraction(frac)
    return str(num) if den == 1 else f"{num}/{den}"


def frac_to_residue(num, den, m):
    """num * den^-1 modulo 2^m + 1, reduced into [0, 2^m]."""
    mod = (1 << m) + 1
    if den == 0 or math.gcd(den, mod) != 1:
        raise FractionError(f"{den} is not invertible modulo {mod}")
    return num * pow(den, -1, mod) % mod


def residue_of(value, m):
    num, den = as_fraction(value)
    return frac_to_residue(num, den, m)


@dataclass(frozen=True, order=True)
class NihoPair:
    m: int
    s: int
    t: int

    def __post_init__(self):
        top = 1 << self.m
        if not (0 <= self.s <= top and 0 <= self.t <= top):
            raise FractionError(f"residues ({self.s}, {self.t}) outside [0, {top}]")

    @property
    def exp_s(self):
        return niho_exponent(self.s, self.m)

    @property
    def exp_t(self):
        return niho_exponent(self.t, self.m)

    @property
    def degenerate(self):
        # s = t cancels both Niho terms; s = 0 (or t = 0) cancels against x
        return self.s == self.t or self.s == 0 or self.t == 0

    def swapped(self):
        return NihoPair(self.m, self.t, self.s)

    def canonical(self):
        return self if self.s <= self.t else self.swapped()


def niho_exponent(s, m, r=1):
    """(s(2^m - 1) + r) mod (2^(2m) - 1)."""
    return (s * ((1 << m) - 1) + r) % ((1 << (2 * m)) - 1)


def niho_pair(s_frac, t_frac, m):
    return NihoPair(m, residue_of(s_frac, m), residue_of(t_frac, m))


def is_normalized_niho(d, m):
    return d % ((1 << m) - 1) == 1 % ((1 << m) - 1)


def _check_agree(direct, closed, what, k, m):
    if direct != closed:
        raise ConsistencyError(
            f"{what}(k={k}, m={m}): direct gcd says {direct}, closed form says {closed}"
        )
    return direct


def coprime_2k_minus_1(k, m):
    """gcd(2^k - 1, 2^m + 1) == 1, cross-checked against "k/gcd(m,k) is odd"."""
    if k < 1 or m < 1:
        raise ValueError("k and m must be positive")
    direct = math.gcd((1 << k) - 1, (1 << m) + 1) == 1
    closed = (k // math.gcd(m, k)) % 2 == 1
    return _check_agree(direct, closed, "coprime_2k_minus_1", k, m)


def coprime_2k_plus_1(k, m):
    """gcd(2^k + 1, 2^m + 1) == 1, cross-checked against "m/gcd or k/gcd is even"."""
    if k < 1 or m < 1:
        raise ValueError("k and m must be positive")
    direct = math.gcd((1 << k) + 1, (1 << m) + 1) == 1
    g = math.gcd(m, k)
    closed = (m // g) % 2 == 0 or (k // g) % 2 == 0
    return _check_agree(direct, closed, "coprime_2k_plus_1", k, m)
