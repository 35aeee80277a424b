"""Integer utilities: radicals, psi, valuations, roots, CRT."""

import math
import random

import pytest

from lucaspow.intarith import (
    ZeroArgument,
    crt_combine,
    dedekind_psi,
    factorize,
    integer_root,
    is_prime,
    largest_prime_le,
    odd_radical,
    ord2,
    perfect_power_split,
    primes_up_to,
    radical,
    squarefree_part,
)


def test_examples():
    assert radical(72) == 6
    assert radical(1) == 1
    assert radical(-20) == 10
    assert odd_radical(-72) == 3
    assert odd_radical(2) == 1
    assert odd_radical(5) == 5
    assert dedekind_psi(1) == 1
    assert dedekind_psi(256) == 384
    assert dedekind_psi(1280) == 2304
    assert ord2(8) == 3
    assert ord2(1) == 0
    assert ord2(-72) == 3
    assert squarefree_part(12) == 3
    assert squarefree_part(1) == 1
    assert squarefree_part(-18) == -2
    assert integer_root(169, 2) == (13, True)
    assert integer_root(0, 5) == (0, True)
    assert integer_root(145, 2) == (12, False)
    assert perfect_power_split(144) == (12, 2)
    assert perfect_power_split(8) == (2, 3)
    assert perfect_power_split(6) is None
    assert crt_combine(0, 10, 0, 12) == (0, 60)
    assert crt_combine(2, 10, 8, 12) == (32, 60)
    assert crt_combine(1, 4, 2, 6) is None


@pytest.mark.parametrize("fn", [radical, odd_radical, ord2, squarefree_part])
def test_zero_rejected(fn):
    with pytest.raises(ZeroArgument):
        fn(0)


def test_factorize_reconstructs():
    rng = random.Random(0)
    for _ in range(300):
        m = rng.randrange(1, 10**9)
        f = factorize(m)
        assert f.value() == m
        assert list(f.primes()) == sorted(set(f.primes()))
        assert all(is_prime(p) for p in f.primes())
    big = 10**18 + 9
    assert factorize(big).pairs == ((big, 1),)


def test_multiplicative_on_coprime_pairs():
    rng = random.Random(1)
    fns = (radical, odd_radical, dedekind_psi, squarefree_part)
    for _ in range(200):
        a = rng.randrange(1, 10**6)
        b = rng.randrange(1, 10**6)
        if math.gcd(a, b) != 1:
            continue
        for fn in fns:
            assert fn(a * b) == fn(a) * fn(b), (fn.__name__, a, b)


def test_odd_radical_relation():
    rng = random.Random(2)
    for _ in range(300):
        m = rng.randrange(1, 10**7)
        assert odd_radical(m) == radical(m) // 2 ** min(1, ord2(m))


def test_integer_root_bracketing():
    rng = random.Random(3)
    for _ in range(300):
        x = rng.randrange(0, 10**30)
        k = rng.randrange(1, 40)
        root, exact = integer_root(x, k)
        assert root**k <= x < (root + 1) ** k
        assert exact == (root**k == x)


def test_perfect_power_roundtrip():
    rng = random.Random(4)
    for _ in range(200):
        y = rng.randrange(2, 10**6)
        p = rng.choice([2, 3, 5, 7, 11, 13])
        x = y**p
        got = perfect_power_split(x)
        assert got is not None
        y2, p2 = got
        assert y2**p2 == x
        # the reported exponent is the largest prime exponent that works
        for bigger in primes_up_to(x.bit_length()):
            if bigger > p2:
                assert integer_root(x, bigger)[1] is False


def test_crt_against_exhaustive_scan():
    rng = random.Random(5)
    for _ in range(400):
        m1 = rng.randrange(1, 500)
        m2 = rng.randrange(1, 500)
        r1 = rng.randrange(m1)
        r2 = rng.randrange(m2)
        got = crt_combine(r1, m1, r2, m2)
        lcm = math.lcm(m1, m2)
        brute = [x for x in range(lcm) if x % m1 == r1 and x % m2 == r2]
        if got is None:
            assert brute == []
        else:
            assert got[1] == lcm and brute == [got[0]]


def test_largest_prime_le():
    assert largest_prime_le(1) == 0
    assert largest_prime_le(2) == 2
    assert largest_prime_le(384) == 383
    assert largest_prime_le(64) == 61


def test_is_prime_matches_sieve():
    table = set(primes_up_to(20000))
    for n in range(20000):
        assert is_prime(n) == (n in table)
