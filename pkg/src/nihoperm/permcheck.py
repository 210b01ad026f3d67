"""Permutation tests for trinomials x^r + x^(s(2^m-1)+r) + x^(t(2^m-1)+r).

Two independent engines are provided:

* ``brute_force_check`` evaluates f on every field element;
* ``zieve_check`` applies the Park-Lee / Zieve criterion: f permutes the
  field iff gcd(r, 2^m - 1) = 1 and h(x) = x^r (1 + x^s + x^t)^(2^m - 1)
  permutes the unit circle U.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass

import numpy as np

from .errors import PreconditionError, RangeError
from .mobius import INF
from .residue import NihoPair, coprime_2k_minus_1, coprime_2k_plus_1, niho_exponent, niho_pair

BRUTE_FORCE = "BruteForce"
ZIEVE_CIRCLE = "ZieveCircle"


@dataclass(frozen=True)
class TrinomialSpec:
    pair: NihoPair
    r: int = 1

    def __post_init__(self):
        if self.r < 1:
            raise ValueError("r must be positive")

    @property
    def m(self):
        return self.pair.m

    def exponents(self):
        """The three raw exponents (r, s(2^m-1)+r, t(2^m-1)+r)."""
        q = (1 << self.m) - 1
        return self.r, self.pair.s * q + self.r, self.pair.t * q + self.r

    def terms(self):
        """Exponents surviving characteristic-2 cancellation, sorted.

        Two positive exponents congruent mod 2^n - 1 give the same function on
        the field, so equal residues cancel in pairs.
        """
        order = (1 << (2 * self.m)) - 1
        counts = Counter(e % order for e in self.exponents())
        alive = {}
        for e in self.exponents():
            if counts[e % order] % 2:
                alive.setdefault(e % order, e)
        return sorted(alive.values())

    @property
    def degenerate(self):
        return len(self.terms()) < 3


def spec(s, t, m, r=1):
    """Convenience constructor from fraction literals."""
    return TrinomialSpec(niho_pair(s, t, m), r)


@dataclass
class VerifyReport:
    is_permutation: bool
    method: str
    spec: TrinomialSpec
    witnesses: tuple | None = None
    circle_degenerate: int | None = None

    def to_json(self):
        p = self.spec.pair
        out = {
            "is_permutation": self.is_permutation,
            "method": self.method,
            "m": p.m,
            "r": self.spec.r,
            "s": p.s,
            "t": p.t,
            "exp_s": niho_exponent(p.s, p.m, self.spec.r),
            "exp_t": niho_exponent(p.t, p.m, self.spec.r),
            "degenerate": self.spec.degenerate,
        }
        if self.witnesses is not None:
            out["witnesses"] = [hex(w) for w in self.witnesses]
        if self.circle_degenerate is not None:
            out["circle_degenerate"] = hex(self.circle_degenerate)
        return out


def evaluate(ctx, spec, xs=None):
    """f(x) for every x in ``xs`` (default: the whole field in integer order)."""
    if xs is None:
        xs = ctx.elements()
    out = np.zeros(len(xs), dtype=np.int64)
    for e in spec.terms():
        out ^= ctx.vpow(xs, e)
    return out


def first_collision(images):
    """Lowest-index j with images[j] == images[i] for some i < j; returns (i, j) or None."""
    order = np.argsort(images, kind="stable")
    srt = images[order]
    dup = np.flatnonzero(srt[1:] == srt[:-1])
    if dup.size == 0:
        return None
    # the later member of each adjacent equal pair; the earliest such j wins
    js = order[dup + 1]
    best = int(np.argmin(js))
    j = int(js[best])
    i = int(np.flatnonzero(images[:j] == images[j])[0])
    return i, j


def brute_force_check(ctx, spec):
    images = evaluate(ctx, spec)
    occupied = np.zeros(ctx.size, dtype=bool)
    occupied[images] = True
    if occupied.all():
        return VerifyReport(True, BRUTE_FORCE, spec)
    return VerifyReport(False, BRUTE_FORCE, spec, witnesses=first_collision(images))


def circle_values(ctx, spec, circle=None):
    """h(x) = x^r (1 + x^s + x^t)^(2^m - 1) on the unit circle, as an array.

    A zero inner factor gives h(x) = 0, which lies off the circle.
    """
    u = ctx.unit_circle_array() if circle is None else circle
    p = spec.pair
    inner = 1 ^ ctx.vpow(u, p.s) ^ ctx.vpow(u, p.t)
    return ctx.vmul(ctx.vpow(u, spec.r), ctx.vpow(inner, (1 << ctx.m) - 1))


def circle_map(ctx, spec):
    """Dict x -> h(x) over U, plus the first x with 1 + x^s + x^t = 0 (or None)."""
    u = ctx.unit_circle_array()
    h = circle_values(ctx, spec, u)
    zero = np.flatnonzero(h == 0)
    degenerate = int(u[zero[0]]) if zero.size else None
    return {int(x): int(y) for x, y in zip(u, h)}, degenerate


def permutes_circle(ctx, values):
    """``values`` (an array indexed like U) is a bijection of U onto itself."""
    v = np.asarray(values, dtype=np.int64)
    if v.size != ctx.circle_size or (v <= 0).any():
        return False
    # every nonzero h value is on U, so U-membership only needs a cheap recheck
    if np.unique(v).size != v.size:
        return False
    return bool((ctx.vpow(v, ctx.circle_size) == 1).all())


def zieve_check(ctx, spec):
    u = ctx.unit_circle_array()
    h = circle_values(ctx, spec, u)
    zero = np.flatnonzero(h == 0)
    degenerate = int(u[zero[0]]) if zero.size else None
    ok = math.gcd(spec.r, (1 << ctx.m) - 1) == 1 and permutes_circle(ctx, h)
    return VerifyReport(ok, ZIEVE_CIRCLE, spec, circle_degenerate=degenerate)


# closed fractional forms of h, as (numerator, denominator) exponent lists
_TABLE1_FORMS = {
    1: ([1], [0]),
    2: ([3, 2, 0], [3, 1, 0]),
    3: ([4, 3, 1], [3, 1, 0]),
    4: ([5, 4, 0], [5, 1, 0]),
    5: ([4, 3, 0], [5, 2, 1]),
    6: ([7, 5, 0], [7, 2, 0]),
    7: ([5, 4, 1], [4, 1, 0]),
    8: ([6, 2, 1], [5, 4, 0]),
    9: ([6, 4, 0], [7, 3, 1]),
}


def table1_form(row, k=None):
    """Numerator and denominator exponent lists of row ``row``'s h(x)."""
    if row in _TABLE1_FORMS:
        return _TABLE1_FORMS[row]
    if row in (10, 11):
        if k is None or k < 1:
            raise ValueError(f"row {row} needs a positive k")
        q = 1 << k
        if row == 10:
            return [q + 1, q, 0], [q + 1, 1, 0]
        return [q + 1, q, 1], [q, 1, 0]
    raise RangeError(f"catalog has rows 1..11, got {row}")


def _poly_values(ctx, exps, xs):
    out = np.zeros(len(xs), dtype=np.int64)
    for e in exps:
        out ^= ctx.vpow(xs, e)
    return out


def fraction_values(ctx, num, den, xs):
    """num(x)/den(x) as an array, with -1 marking a vanishing denominator."""
    nv = _poly_values(ctx, num, xs)
    dv = _poly_values(ctx, den, xs)
    safe = np.where(dv == 0, 1, dv)
    q = ctx.vmul(nv, ctx.vpow(safe, ctx.order - 1))
    return np.where(dv == 0, -1, q)


def table1_fraction(ctx, row, k=None):
    """Row ``row``'s h(x) evaluated on U; vanishing denominators give ``INF``."""
    num, den = table1_form(row, k)
    u = ctx.unit_circle_array()
    vals = fraction_values(ctx, num, den, u)
    return {int(x): (INF if y < 0 else int(y)) for x, y in zip(u, vals)}


def thm1_spec(ctx, k):
    return spec((1 << k, (1 << k) - 1), (-1, (1 << k) - 1), ctx.m)


def thm2_spec(ctx, k):
    return spec((1, (1 << k) + 1), (1 << k, (1 << k) + 1), ctx.m)


def thm1_denominator_nonvanishing(ctx, k):
    """x^(2^k+1) + x + 1 != 0 on U."""
    u = ctx.unit_circle_array()
    return bool((_poly_values(ctx, [(1 << k) + 1, 1, 0], u) != 0).all())


def thm2_denominator_nonvanishing(ctx, k):
    """x^(2^k) + x + 1 != 0 on U."""
    u = ctx.unit_circle_array()
    return bool((_poly_values(ctx, [1 << k, 1, 0], u) != 0).all())


def _substitution_side(ctx, k, row):
    u = ctx.unit_circle_array()
    if row == 10:
        sp, d = thm1_spec(ctx, k), (1 << k) - 1
        denom_ok = thm1_denominator_nonvanishing(ctx, k)
    else:
        sp, d = thm2_spec(ctx, k), (1 << k) + 1
        denom_ok = thm2_denominator_nonvanishing(ctx, k)
    h_sub = circle_values(ctx, sp, ctx.vpow(u, d))
    num, den = table1_form(row, k)
    closed = fraction_values(ctx, num, den, u)
    return denom_ok and bool((h_sub == closed).all())


def substitution_identity_check(ctx, k, sides=None):
    """h(x^(2^k-1)) and h(x^(2^k+1)) against the row-10 / row-11 closed forms on U.

    ``sides`` is a subset of {"thm1", "thm2"}; by default every side whose gcd
    hypothesis holds at (k, m) is checked, and it is an error if none does.
    Denominator nonvanishing on U is part of each side's check.
    """
    m = ctx.m
    valid = {"thm1": k < m and coprime_2k_minus_1(k, m), "thm2": coprime_2k_plus_1(k, m)}
    if sides is None:
        sides = [name for name, ok in valid.items() if ok]
        if not sides:
            raise PreconditionError(f"no theorem hypothesis holds at k={k}, m={m}")
    for name in sides:
        if not valid[name]:
            raise PreconditionError(f"{name} hypothesis fails at k={k}, m={m}", condition=name)
    rows = {"thm1": 10, "thm2": 11}
    return all(_substitution_side(ctx, k, rows[name]) for name in sides)
