import pytest

from nihoperm import gf2poly

# criterion id -> (passed, description); filled by test_acceptance
ACCEPTANCE_RESULTS = {}


def naive_mul(x, y, modulus):
    """Schoolbook product then long division; shares nothing with FieldCtx."""
    return gf2poly.polymod(gf2poly.clmul(x, y), modulus)


def naive_pow(x, e, modulus):
    r = 1
    for _ in range(e):
        r = naive_mul(r, x, modulus)
    return r


def naive_pow_fast(x, e, modulus):
    r, b = 1, x
    while e:
        if e & 1:
            r = naive_mul(r, b, modulus)
        b = naive_mul(b, b, modulus)
        e >>= 1
    return r


def naive_is_permutation(m, modulus, exponents):
    """Evaluate sum of x^e over the whole field with plain Python ints."""
    images = set()
    for x in range(1 << (2 * m)):
        y = 0
        for e in exponents:
            y ^= naive_pow_fast(x, e, modulus)
        images.add(y)
    return len(images) == 1 << (2 * m)


@pytest.fixture
def record_acceptance():
    def record(cid, passed, text):
        ACCEPTANCE_RESULTS[cid] = (passed, text)

    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for cid in sorted(ACCEPTANCE_RESULTS, key=lambda c: int(c.lstrip("AC"))):
        passed, text = ACCEPTANCE_RESULTS[cid]
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  {cid}: {text}")
