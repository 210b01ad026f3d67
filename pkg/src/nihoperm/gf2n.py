"""Arithmetic in GF(2^n), n = 2m, with elements packed into ints.

Elements are plain ``int`` bit patterns in polynomial basis (bit i is the
coefficient of x^i); the zero and one elements are 0 and 1. A ``FieldCtx``
carries the modulus and a fixed primitive element and interprets them.

For n <= TABLE_MAX_N the context also holds numpy exp/log tables so that whole
arrays of elements can be raised to a power at once; above that size the
vector routines fall back to a bitwise carry-less multiply.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources

import numpy as np

from . import gf2poly
from .errors import DivisionByZero, ModulusError, RangeError

M_MIN, M_MAX = 2, 16
TABLE_MAX_N = 20


@lru_cache(maxsize=None)
def _load_table(path):
    if path is None:
        text = resources.files("nihoperm").joinpath("data/moduli.json").read_text()
    else:
        with open(path) as fh:
            text = fh.read()
    return {int(k): int(v, 16) for k, v in json.loads(text).items()}


def modulus_table():
    """Degree -> default modulus; ``NIHO_MODULUS_TABLE`` overrides the shipped file."""
    return _load_table(os.environ.get("NIHO_MODULUS_TABLE"))


def _clmul_reduce(a, b, n, modulus):
    r = 0
    top = 1 << n
    while b:
        if b & 1:
            r ^= a
        b >>= 1
        a <<= 1
        if a & top:
            a ^= modulus
    return r


def _find_generator(n, modulus):
    order = (1 << n) - 1
    cofactors = [order // q for q in gf2poly.prime_factors(order)]
    for g in range(2, 1 << n):
        if all(_pow_plain(g, c, n, modulus) != 1 for c in cofactors):
            return g
    raise ModulusError(f"no primitive element found modulo {modulus:#x}")


def _pow_plain(x, e, n, modulus):
    r = 1
    while e:
        if e & 1:
            r = _clmul_reduce(r, x, n, modulus)
        e >>= 1
        if e:
            x = _clmul_reduce(x, x, n, modulus)
    return r


def _vec_clmul(a, b, n, modulus):
    a = a.astype(np.uint64, copy=True)
    b = b.astype(np.uint64, copy=True)
    r = np.zeros(np.broadcast(a, b).shape, dtype=np.uint64)
    top = np.uint64(1 << n)
    red = np.uint64(modulus)
    one = np.uint64(1)
    for _ in range(n):
        r ^= np.where(b & one, a, np.uint64(0))
        b >>= one
        a = a << one
        a = np.where(a & top, a ^ red, a)
    return r


@dataclass(frozen=True)
class FieldCtx:
    m: int
    modulus: int
    generator: int = field(init=False)
    exp_table: np.ndarray | None = field(init=False, repr=False, compare=False)
    log_table: np.ndarray | None = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        n = 2 * self.m
        if gf2poly.degree(self.modulus) != n:
            raise ModulusError(f"modulus {self.modulus:#x} does not have degree {n}")
        if not gf2poly.is_irreducible(self.modulus):
            raise ModulusError(f"modulus {self.modulus:#x} is reducible")
        g = _find_generator(n, self.modulus)
        object.__setattr__(self, "generator", g)
        exp_t = log_t = None
        if n <= TABLE_MAX_N:
            exp_t, log_t = self._build_tables(g)
        object.__setattr__(self, "exp_table", exp_t)
        object.__setattr__(self, "log_table", log_t)

    def _build_tables(self, g):
        n, order = self.n, self.order
        # doubling: exp[2^j : 2^(j+1)] = exp[0 : 2^j] * g^(2^j)
        exp_t = np.ones(1, dtype=np.uint64)
        step = g
        while exp_t.size < order:
            exp_t = np.concatenate([exp_t, _vec_clmul(exp_t, np.uint64(step), n, self.modulus)])
            step = _clmul_reduce(step, step, n, self.modulus)
        exp_t = exp_t[:order].astype(np.int64)
        log_t = np.full(1 << n, -1, dtype=np.int64)
        log_t[exp_t] = np.arange(order, dtype=np.int64)
        if (log_t[1:] < 0).any():
            raise ModulusError("generator table is not a bijection")
        exp_t.flags.writeable = False
        log_t.flags.writeable = False
        return exp_t, log_t

    @property
    def n(self):
        return 2 * self.m

    @property
    def order(self):
        return (1 << self.n) - 1

    @property
    def size(self):
        return 1 << self.n

    # scalar arithmetic

    def add(self, x, y):
        return x ^ y

    def mul(self, x, y):
        if self.log_table is not None:
            if x == 0 or y == 0:
                return 0
            return int(self.exp_table[(self.log_table[x] + self.log_table[y]) % self.order])
        return _clmul_reduce(x, y, self.n, self.modulus)

    def pow(self, x, e):
        if x == 0:
            if e < 0:
                raise DivisionByZero("0 raised to a negative power")
            return 1 if e == 0 else 0
        e %= self.order
        if self.log_table is not None:
            return int(self.exp_table[int(self.log_table[x]) * e % self.order])
        return _pow_plain(x, e, self.n, self.modulus)

    def inv(self, x):
        if x == 0:
            raise DivisionByZero("0 has no inverse")
        return self.pow(x, self.order - 1)

    def div(self, x, y):
        return self.mul(x, self.inv(y))

    def frobenius(self, x, j):
        """x^(2^j) by j squarings; j = m gives the conjugate over GF(2^m)."""
        if j < 0:
            raise ValueError("frobenius power must be non-negative")
        for _ in range(j % self.n):
            x = self.mul(x, x)
        return x

    def conj(self, x):
        return self.frobenius(x, self.m)

    # unit circle

    @property
    def circle_size(self):
        return (1 << self.m) + 1

    def circle_generator(self):
        return self.pow(self.generator, (1 << self.m) - 1)

    def unit_circle(self):
        """The 2^m + 1 elements w^i, w = g^(2^m - 1), for i = 0 .. 2^m."""
        return [int(u) for u in self.unit_circle_array()]

    def unit_circle_array(self):
        w = self.circle_generator()
        if self.exp_table is not None:
            idx = np.arange(self.circle_size, dtype=np.int64) * ((1 << self.m) - 1)
            return self.exp_table[idx % self.order]
        out = np.empty(self.circle_size, dtype=np.int64)
        x = 1
        for i in range(self.circle_size):
            out[i] = x
            x = self.mul(x, w)
        return out

    def is_in_unit_circle(self, x):
        return x != 0 and self.pow(x, self.circle_size) == 1

    # vectorised arithmetic on int64 arrays

    def vmul(self, x, y):
        x = np.asarray(x, dtype=np.int64)
        y = np.asarray(y, dtype=np.int64)
        if self.log_table is not None:
            prod = self.exp_table[(self.log_table[x] + self.log_table[y]) % self.order]
            return np.where((x == 0) | (y == 0), 0, prod)
        return _vec_clmul(x, y, self.n, self.modulus).astype(np.int64)

    def vpow(self, x, e):
        """Elementwise x^e for a fixed exponent e >= 0 (0^0 = 1)."""
        if e < 0:
            raise ValueError("vpow takes a non-negative exponent")
        x = np.asarray(x, dtype=np.int64)
        if e == 0:
            return np.ones_like(x)
        er = e % self.order
        if self.log_table is not None:
            p = self.exp_table[(self.log_table[x] * er) % self.order]
            return np.where(x == 0, 0, p)
        r = np.ones_like(x)
        base = x.copy()
        while er:
            if er & 1:
                r = self.vmul(r, base)
            er >>= 1
            if er:
                base = self.vmul(base, base)
        # e > 0 with e = 0 mod order: x^e = 1 for x != 0, and 0 for x = 0
        return np.where(x == 0, 0, r)

    def elements(self):
        return np.arange(self.size, dtype=np.int64)


@lru_cache(maxsize=64)
def ctx_new(m, modulus=None):
    """Build (and cache) the context for GF(2^(2m)).

    Without an explicit ``modulus`` the lowest-weight irreducible of degree 2m
    from the modulus table is used.
    """
    if not isinstance(m, int) or not M_MIN <= m <= M_MAX:
        raise RangeError(f"m must be an integer in [{M_MIN}, {M_MAX}], got {m!r}")
    if modulus is None:
        modulus = modulus_table()[2 * m]
    return FieldCtx(m, modulus)


def to_hex(x):
    return hex(x)


def from_hex(s):
    return int(s, 16)
