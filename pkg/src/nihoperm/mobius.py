"""Linear fractional maps on GF(2^n) together with a point at infinity.

Projective points are plain ints for finite values and the ``INF`` singleton
for infinity.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import DegenerateMapError, DomainError
from .gf2n import FieldCtx


class _Infinity:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INF"

    def __reduce__(self):
        return (_Infinity, ())


INF = _Infinity()


def is_inf(p):
    return p is INF


def point_to_str(p):
    return "inf" if p is INF else hex(p)


def point_from_str(text):
    return INF if text.strip().lower() == "inf" else int(text, 16)


@dataclass(frozen=True)
class MobiusMap:
    """x -> (a x + b) / (c x + d) over ``ctx``; the quadruple is kept unnormalised."""

    ctx: FieldCtx = field(repr=False, compare=False)
    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if self.det() == 0:
            raise DegenerateMapError(f"zero determinant for {self.coeffs()}")

    def det(self):
        f = self.ctx
        return f.mul(self.a, self.d) ^ f.mul(self.b, self.c)

    def coeffs(self):
        return self.a, self.b, self.c, self.d

    def __call__(self, p):
        return mobius_apply(self, p)


class IdentityForm:
    """The iterate x^(2^(ik)) collapsed to x itself."""

    def __repr__(self):
        return "IdentityForm()"

    def __eq__(self, other):
        return isinstance(other, IdentityForm)

    def __hash__(self):
        return hash(IdentityForm)

    def __call__(self, p):
        return p


def mobius_apply(f, p):
    F = f.ctx
    if p is INF:
        return F.div(f.a, f.c) if f.c else INF
    num = F.mul(f.a, p) ^ f.b
    den = F.mul(f.c, p) ^ f.d
    if den == 0:
        return INF
    return F.div(num, den)


def mobius_compose(f, g):
    """f o g, i.e. x -> f(g(x))."""
    F = f.ctx
    mul = F.mul
    return MobiusMap(
        F,
        mul(f.a, g.a) ^ mul(f.b, g.c),
        mul(f.a, g.b) ^ mul(f.b, g.d),
        mul(f.c, g.a) ^ mul(f.d, g.c),
        mul(f.c, g.b) ^ mul(f.d, g.d),
    )


def identity_map(ctx):
    return MobiusMap(ctx, 1, 0, 0, 1)


def same_map(f, g):
    """True iff the two quadruples are proportional (all 2x2 minors vanish)."""
    F = f.ctx
    u, v = f.coeffs(), g.coeffs()
    return all(
        F.mul(u[i], v[j]) == F.mul(u[j], v[i]) for i in range(4) for j in range(i + 1, 4)
    )


def phi_from_a(ctx, a):
    """phi_a(x) = (a x + (a + 1)) / ((a + 1) x + 1) for a on the unit circle."""
    if not ctx.is_in_unit_circle(a):
        raise DomainError(f"{a:#x} is not on the unit circle")
    # det = a + (a + 1)^2 = a^2 + a + 1
    if ctx.mul(a, a) ^ a ^ 1 == 0:
        raise DegenerateMapError(f"a = {a:#x} satisfies a^2 + a + 1 = 0")
    return MobiusMap(ctx, a, a ^ 1, a ^ 1, 1)


def _require_lemma_domain(ctx, a, k):
    if k < 1:
        raise DomainError("k must be positive")
    if not ctx.is_in_unit_circle(a):
        raise DomainError(f"{a:#x} is not on the unit circle")
    if ctx.pow(a, 3) == 1:
        raise DomainError(f"a = {a:#x} has a^3 = 1")


@dataclass(frozen=True)
class ESequence:
    ctx: FieldCtx = field(repr=False, compare=False)
    a: int
    k: int
    e1: int
    entries: tuple  # entries[i] is e_(i+1)

    def __getitem__(self, i):
        """e_i with 1-based index."""
        if i < 1:
            raise IndexError(i)
        return self.entries[i - 1]


def e_sequence(ctx, a, k, i_max):
    """e_1 = a/(a+1); e_i = INF if e_(i-1)^(2^k) + e_1 + 1 = 0, else phi(e_(i-1)^(2^k)).

    After an INF the next term is phi(INF) = e_1.
    """
    _require_lemma_domain(ctx, a, k)
    if i_max < 1:
        raise ValueError("i_max must be at least 1")
    phi = phi_from_a(ctx, a)
    e1 = ctx.div(a, a ^ 1)
    entries = [e1]
    for _ in range(2, i_max + 1):
        prev = entries[-1]
        if prev is INF:
            entries.append(mobius_apply(phi, INF))
            continue
        y = ctx.frobenius(prev, k)
        if y ^ e1 ^ 1 == 0:
            entries.append(INF)
        else:
            entries.append(mobius_apply(phi, y))
    return ESequence(ctx, a, k, e1, tuple(entries))


def e_form(ctx, e):
    """x -> (e x + 1) / (x + e + 1)."""
    return MobiusMap(ctx, e, 1, 1, e ^ 1)


def iterate_form(ctx, a, k, i, seq=None):
    """Closed form of x^(2^(ik)) for x with x^(2^k) = phi_a(x).

    Returns ``IdentityForm()`` when e_i is infinite, else the map
    (e_i x + 1) / (x + e_i + 1). Pass a precomputed ``seq`` to avoid
    rebuilding the e-sequence.
    """
    if i < 1:
        raise ValueError("i must be at least 1")
    if seq is None or len(seq.entries) < i:
        seq = e_sequence(ctx, a, k, i)
    e = seq[i]
    if e is INF:
        return IdentityForm()
    return e_form(ctx, e)


def lemma_solutions(ctx, a, k):
    """All x on the unit circle with x^(2^k) = phi_a(x)."""
    phi = phi_from_a(ctx, a)
    return [x for x in ctx.unit_circle() if ctx.frobenius(x, k) == mobius_apply(phi, x)]


def verify_iterates(ctx, a, k, i_max):
    """Check frobenius(x, ik) against ``iterate_form`` for every solution x and 2 <= i <= i_max.

    Returns (solutions, list of (i, x) failures).
    """
    seq = e_sequence(ctx, a, k, i_max)
    sols = lemma_solutions(ctx, a, k)
    bad = []
    for i in range(2, i_max + 1):
        form = iterate_form(ctx, a, k, i, seq)
        for x in sols:
            if ctx.frobenius(x, i * k) != form(x):
                bad.append((i, x))
    return sols, bad
