"""Polynomials over GF(2) packed into Python ints (bit i = coefficient of x^i)."""

from functools import lru_cache


def degree(p):
    return p.bit_length() - 1


def clmul(a, b):
    r = 0
    while b:
        if b & 1:
            r ^= a
        a <<= 1
        b >>= 1
    return r


def polymod(a, p):
    dp = degree(p)
    while a and degree(a) >= dp:
        a ^= p << (degree(a) - dp)
    return a


def polygcd(a, b):
    while b:
        a, b = b, polymod(a, b)
    return a


def mulmod(a, b, p):
    return polymod(clmul(a, b), p)


def prime_factors(n):
    """Distinct prime factors of n by trial division (fine for n < 2^40)."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


def is_irreducible(p):
    """Rabin's test: x^(2^n) = x mod p and gcd(x^(2^(n/q)) - x, p) = 1 for primes q | n."""
    n = degree(p)
    if n < 1:
        return False
    if n == 1:
        return True

    def x_pow_2_pow(j):
        y = 2
        for _ in range(j):
            y = mulmod(y, y, p)
        return y

    if x_pow_2_pow(n) != polymod(2, p):
        return False
    for q in prime_factors(n):
        if polygcd(p, x_pow_2_pow(n // q) ^ polymod(2, p)) != 1:
            return False
    return True


def irreducibles(n):
    """All irreducible polynomials of degree n, ordered by (weight, integer value)."""
    cands = [p for p in range(1 << n, 1 << (n + 1)) if p & 1 and is_irreducible(p)]
    return sorted(cands, key=lambda p: (bin(p).count("1"), p))


@lru_cache(maxsize=None)
def lowest_weight_irreducible(n):
    """Lowest-weight irreducible of degree n, ties broken by least integer value.

    Only trinomials and pentanomials are scanned; one of them exists for every
    degree this package supports.
    """
    top = 1 << n
    for a in range(1, n):
        p = top | (1 << a) | 1
        if is_irreducible(p):
            return p
    best = None
    for a in range(3, n):
        for b in range(2, a):
            for c in range(1, b):
                p = top | (1 << a) | (1 << b) | (1 << c) | 1
                if (best is None or p < best) and is_irreducible(p):
                    best = p
    if best is None:
        raise ValueError(f"no irreducible trinomial or pentanomial of degree {n}")
    return best


def to_string(p):
    terms = []
    for i in range(degree(p), -1, -1):
        if p >> i & 1:
            terms.append("1" if i == 0 else "x" if i == 1 else f"x^{i}")
    return " + ".join(terms) if terms else "0"
