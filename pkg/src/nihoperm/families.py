"""Known permutation families: the two k-parameterised families and the catalog of known pairs."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import FractionError, PreconditionError
from .permcheck import TrinomialSpec, circle_values
from .residue import coprime_2k_minus_1, coprime_2k_plus_1, format_fraction, niho_pair

# condition codes
ALL_M = "AllM"
M_EVEN = "MEven"
GCD3M = "Gcd3M"
GCD5 = "Gcd5"
M_2_OR_4_MOD_6 = "M2or4mod6"
COPRIME_POW2_MINUS_1 = "CoprimePow2Minus1"
COPRIME_POW2_PLUS_1 = "CoprimePow2Plus1"
EXTERNAL = "External"


def thm1_pair(k, m):
    """(2^k/(2^k - 1), -1/(2^k - 1)), valid for k < m with gcd(2^k - 1, 2^m + 1) = 1."""
    if not 1 <= k < m:
        raise PreconditionError(f"need 1 <= k < m, got k={k}, m={m}", condition="k<m")
    if not coprime_2k_minus_1(k, m):
        raise PreconditionError(
            f"gcd(2^{k} - 1, 2^{m} + 1) != 1", condition="gcd(2^k-1, 2^m+1)=1"
        )
    d = (1 << k) - 1
    return niho_pair((1 << k, d), (-1, d), m)


def thm2_pair(k, m):
    """(1/(2^k + 1), 2^k/(2^k + 1)), valid when gcd(2^k + 1, 2^m + 1) = 1."""
    if k < 1:
        raise PreconditionError(f"need k >= 1, got {k}", condition="k>=1")
    if not coprime_2k_plus_1(k, m):
        raise PreconditionError(
            f"gcd(2^{k} + 1, 2^{m} + 1) != 1", condition="gcd(2^k+1, 2^m+1)=1"
        )
    d = (1 << k) + 1
    return niho_pair((1, d), (1 << k, d), m)


def thm1_ks(m):
    return [k for k in range(1, m) if coprime_2k_minus_1(k, m)]


def thm2_ks(m):
    return [k for k in range(1, m + 1) if coprime_2k_plus_1(k, m)]


@dataclass(frozen=True)
class FamilyEntry:
    row: int
    pair_fracs: tuple
    condition: str
    condition_text: str
    equivalent_pairs: tuple = ()
    h_text: str = ""
    source_row_note: str = ""
    k_param: bool = False

    def pair_literals(self, k=None):
        """(s, t) as fraction literals, with k substituted for k-parameterised rows."""
        return _instantiate(self.pair_fracs, k)

    def equivalent_literals(self, k=None):
        return [_instantiate(p, k) for p in self.equivalent_pairs]

    def condition_holds(self, m, k=None):
        c = self.condition
        if c == ALL_M:
            return True
        if c == M_EVEN:
            return m % 2 == 0
        if c == GCD3M:
            return math.gcd(3, m) == 1
        if c == GCD5:
            return math.gcd(5, (1 << m) + 1) == 1
        if c == M_2_OR_4_MOD_6:
            return m % 6 in (2, 4)
        if c == COPRIME_POW2_MINUS_1:
            return k is not None and 1 <= k < m and coprime_2k_minus_1(k, m)
        if c == COPRIME_POW2_PLUS_1:
            return k is not None and k >= 1 and coprime_2k_plus_1(k, m)
        return False

    def to_json(self):
        return {
            "row": self.row,
            "pair": [_frac_text(f) for f in self.pair_fracs],
            "condition": self.condition,
            "condition_text": self.condition_text,
            "equivalents": [[_frac_text(f) for f in p] for p in self.equivalent_pairs],
            "h": self.h_text,
            "note": self.source_row_note,
        }


def _instantiate(pair, k):
    out = []
    for f in pair:
        if callable(f):
            if k is None:
                raise ValueError("k-parameterised entry needs k")
            f = f(k)
        out.append(f)
    return tuple(out)


def _frac_text(f):
    return getattr(f, "text", None) or format_fraction(f)


class _KFrac:
    """Fraction literal depending on k, e.g. 2^k/(2^k - 1)."""

    def __init__(self, text, fn):
        self.text = text
        self.fn = fn

    def __call__(self, k):
        return self.fn(k)

    def __repr__(self):
        return self.text


_K_FRACS = {
    "2^k/(2^k-1)": _KFrac("2^k/(2^k-1)", lambda k: (1 << k, (1 << k) - 1)),
    "-1/(2^k-1)": _KFrac("-1/(2^k-1)", lambda k: (-1, (1 << k) - 1)),
    "1/(2^k+1)": _KFrac("1/(2^k+1)", lambda k: (1, (1 << k) + 1)),
    "2^k/(2^k+1)": _KFrac("2^k/(2^k+1)", lambda k: (1 << k, (1 << k) + 1)),
    "k": _KFrac("k", lambda k: (k, 1)),
    "-k": _KFrac("-k", lambda k: (-k, 1)),
}


def _f(text):
    return _K_FRACS[text] if text in _K_FRACS else text


_CATALOG = (
    FamilyEntry(1, (_f("k"), _f("-k")), EXTERNAL, "established elsewhere",
                (), "x",
                "equivalents (+-k/(2k-+1), +-2k/(2k-+1)) left symbolic", k_param=True),
    FamilyEntry(2, ("2", "-1"), ALL_M, "positive m",
                (("1", "1/3"), ("1", "2/3")), "(x^3+x^2+1)/(x^3+x+1)"),
    FamilyEntry(3, ("1", "-1/2"), GCD3M, "gcd(3,m)=1",
                (("1", "3/2"), ("1/4", "3/4")), "x(x^3+x^2+1)/(x^3+x+1)"),
    FamilyEntry(4, ("-1/3", "4/3"), M_EVEN, "m even",
                (("1", "1/5"), ("1", "4/5")), "(x^5+x^4+1)/(x^5+x+1)"),
    FamilyEntry(5, ("3", "-1"), M_EVEN, "m even",
                (("3/5", "4/5"), ("1/3", "4/3")), "(x^4+x^3+1)/(x(x^4+x+1))"),
    FamilyEntry(6, ("-2/3", "5/3"), M_EVEN, "m even",
                (("1", "2/7"), ("1", "5/7")), "(x^7+x^5+1)/(x^7+x^2+1)"),
    FamilyEntry(7, ("1/5", "4/5"), GCD5, "gcd(5,2^m+1)=1",
                (("1", "-1/3"), ("1", "4/3")), "x(x^4+x^3+1)/(x^4+x+1)"),
    FamilyEntry(8, ("2", "-1/2"), M_2_OR_4_MOD_6, "m = 2,4 (mod 6)",
                (("2/3", "5/6"), ("1/4", "5/4")), "x(x^5+x+1)/(x^5+x^4+1)",
                "equivalent pairs printed identically in row 9"),
    FamilyEntry(9, ("4", "-2"), GCD3M, "gcd(3,m)=1",
                (("2/3", "5/6"), ("1/4", "5/4")), "(x^6+x^4+1)/(x(x^6+x^2+1))",
                "equivalent pairs printed identically in row 8"),
    FamilyEntry(10, (_f("2^k/(2^k-1)"), _f("-1/(2^k-1)")), COPRIME_POW2_MINUS_1,
                "gcd(2^k-1,2^m+1)=1",
                ((_f("1"), _f("1/(2^k+1)")), (_f("1"), _f("2^k/(2^k+1)"))),
                "(x^(2^k+1)+x^(2^k)+1)/(x^(2^k+1)+x+1)", k_param=True),
    FamilyEntry(11, (_f("1/(2^k+1)"), _f("2^k/(2^k+1)")), COPRIME_POW2_PLUS_1,
                "gcd(2^k+1,2^m+1)=1",
                ((_f("1"), _f("2^k/(2^k-1)")), (_f("1"), _f("-1/(2^k-1)"))),
                "(x^(2^k+1)+x^(2^k)+x)/(x^(2^k)+x+1)", k_param=True),
)


def table1_catalog():
    return list(_CATALOG)


def catalog_row(row):
    for entry in _CATALOG:
        if entry.row == row:
            return entry
    raise KeyError(row)


@dataclass
class RowInstance:
    """One catalog row at a concrete (m, k): main pair plus equivalent pairs."""

    entry: FamilyEntry
    m: int
    k: int | None
    pair: object  # NihoPair
    equivalents: list = field(default_factory=list)  # (literals, NihoPair | None)

    @property
    def tag(self):
        return f"row{self.entry.row}" if self.k is None else f"row{self.entry.row}(k={self.k})"


def _row_instance(entry, m, k):
    pair = niho_pair(*entry.pair_literals(k), m)
    eqs = []
    for lits in entry.equivalent_literals(k):
        try:
            eqs.append((lits, niho_pair(*lits, m)))
        except FractionError:
            eqs.append((lits, None))  # denominator not invertible mod 2^m + 1
    return RowInstance(entry, m, k, pair, eqs)


def applicable_rows(m):
    """Row instances whose condition holds at m; External rows are left out.

    Row 10 is expanded over k in [1, m-1] and row 11 over k in [1, m].
    """
    out = []
    for entry in _CATALOG:
        if entry.condition == EXTERNAL:
            continue
        if entry.row == 10:
            ks = range(1, m)
        elif entry.row == 11:
            ks = range(1, m + 1)
        else:
            ks = [None]
        for k in ks:
            if entry.condition_holds(m, k):
                out.append(_row_instance(entry, m, k))
    return out


def equivalent_same_h(ctx, spec1, spec2):
    """True iff the two specs have identical circle maps h on U."""
    if spec1.m != spec2.m or spec1.m != ctx.m:
        raise ValueError("specs must live over the same field")
    u = ctx.unit_circle_array()
    return bool(np.array_equal(circle_values(ctx, spec1, u), circle_values(ctx, spec2, u)))


def row_spec(instance, r=1):
    return TrinomialSpec(instance.pair, r)
