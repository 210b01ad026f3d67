"""Exhaustive search for permutation pairs (s, t) at a fixed m."""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from .errors import ConsistencyError, RangeError
from .families import applicable_rows
from .gf2n import ctx_new
from .permcheck import TrinomialSpec, brute_force_check, circle_values
from .residue import NihoPair, niho_exponent

SEARCH_M_MAX = 8
CROSS_VALIDATE_M_MAX = 5
IDENTITY_DEGENERATE = "identity-degenerate"


@dataclass(frozen=True)
class SearchHit:
    pair: NihoPair
    families: tuple
    via_equivalence: bool
    r: int = 1

    def to_json(self):
        p = self.pair
        return {
            "m": p.m,
            "r": self.r,
            "s": p.s,
            "t": p.t,
            "exp_s": niho_exponent(p.s, p.m, self.r),
            "exp_t": niho_exponent(p.t, p.m, self.r),
            "families": list(self.families),
            "via_equivalence": self.via_equivalence,
        }

    def csv_row(self):
        d = self.to_json()
        return [d["m"], d["s"], d["t"], d["exp_s"], d["exp_t"], ";".join(d["families"]),
                str(d["via_equivalence"]).lower()]


CSV_HEADER = ["m", "s", "t", "exp_s", "exp_t", "families", "via_equivalence"]


def _circle_rows(ctx, s, r):
    """h for (s, t), t = s .. 2^m, stacked as a (2^m + 1 - s, |U|) array."""
    u = ctx.unit_circle_array()
    d = ctx.circle_size
    idx = np.arange(d, dtype=np.int64)
    ts = np.arange(s, d, dtype=np.int64)
    # u^t at position i is u[i*t mod d] because u[i] = w^i with w of order d
    ut = u[np.outer(ts, idx) % d]
    inner = 1 ^ u[(idx * s) % d] ^ ut
    h = ctx.vmul(ctx.vpow(u, r)[None, :], ctx.vpow(inner, (1 << ctx.m) - 1))
    return ts, h


def _scan_s(ctx, s, r):
    ts, h = _circle_rows(ctx, s, r)
    srt = np.sort(h, axis=1)
    ok = (srt[:, 0] > 0) & (np.diff(srt, axis=1) != 0).all(axis=1)
    return [int(t) for t in ts[ok]]


def _scan_chunk(args):
    m, modulus, r, ss = args
    ctx = ctx_new(m, modulus)
    return [(s, t) for s in ss for t in _scan_s(ctx, s, r)]


def scan_pairs(ctx, r=1, jobs=1):
    """Canonical pairs 1 <= s <= t <= 2^m whose circle map permutes U, in lexicographic order."""
    if math.gcd(r, (1 << ctx.m) - 1) != 1:
        return []
    svals = list(range(1, (1 << ctx.m) + 1))
    if jobs <= 1:
        found = _scan_chunk((ctx.m, ctx.modulus, r, svals))
    else:
        chunks = [svals[i::jobs] for i in range(jobs)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = pool.map(_scan_chunk, [(ctx.m, ctx.modulus, r, c) for c in chunks if c])
            found = [p for part in parts for p in part]
    return sorted(found)


class Classifier:
    """Matches pairs against the catalog rows applicable at ``ctx.m``."""

    def __init__(self, ctx):
        self.ctx = ctx
        self.u = ctx.unit_circle_array()
        self.rows = applicable_rows(ctx.m)
        self._row_h = [
            (inst.tag, circle_values(ctx, TrinomialSpec(inst.pair), self.u)) for inst in self.rows
        ]

    def classify(self, pair, r=1):
        """Row tags for ``pair``, and whether every match was through h-equality only.

        Tags: ``rowN`` / ``rowN(k=K)`` for a main pair, ``...:eq`` for a listed
        equivalent pair, ``row1(k=K)`` for the (k, -k) shape, and
        ``identity-degenerate`` when s = t.
        """
        if pair.s == pair.t:
            return [IDENTITY_DEGENERATE], False
        key = (min(pair.s, pair.t), max(pair.s, pair.t))
        direct = []
        if r == 1:
            d = self.ctx.circle_size
            if (pair.s + pair.t) % d == 0:
                direct.append(f"row1(k={key[0]})")
            for inst in self.rows:
                p = inst.pair
                if (min(p.s, p.t), max(p.s, p.t)) == key:
                    direct.append(inst.tag)
                for _, eq in inst.equivalents:
                    if eq is not None and (min(eq.s, eq.t), max(eq.s, eq.t)) == key:
                        direct.append(inst.tag + ":eq")
        h = circle_values(self.ctx, TrinomialSpec(pair, r), self.u)
        via = [tag for tag, rh in self._row_h if np.array_equal(h, rh) and tag not in direct]
        tags = direct + via
        return tags, bool(via) and not direct


def classify(ctx, pair, r=1):
    return Classifier(ctx).classify(pair, r)[0]


def exhaustive_search(ctx, r=1, jobs=1, cross_validate=None):
    """All canonical permutation pairs at ``ctx.m`` with catalog classification.

    Brute-force cross-validation of each hit defaults to on for m <= 5.
    """
    m = ctx.m
    if not 2 <= m <= SEARCH_M_MAX:
        raise RangeError(f"search supports 2 <= m <= {SEARCH_M_MAX}, got {m}")
    if cross_validate is None:
        cross_validate = m <= CROSS_VALIDATE_M_MAX
    clf = Classifier(ctx)
    hits = []
    for s, t in scan_pairs(ctx, r, jobs):
        pair = NihoPair(m, s, t)
        if cross_validate and not brute_force_check(ctx, TrinomialSpec(pair, r)).is_permutation:
            raise ConsistencyError(f"circle criterion and brute force disagree at {pair}")
        tags, via = clf.classify(pair, r)
        hits.append(SearchHit(pair, tuple(tags), via, r))
    return hits
