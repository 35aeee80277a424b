"""Sequence arithmetic: exact terms, modular terms, and the two identities."""

import math
import random

import pytest

from lucaspow.lucas import (
    DegenerateSequence,
    new_params,
    successive_pair_mod,
    term_pair,
    term_pair_mod,
    verify_identities,
)


def naive_terms(b, c, n):
    """Oracle: straight iteration of both recurrences."""
    u = [0, 1]
    v = [2, b]
    for _ in range(n):
        u.append(b * u[-1] + c * u[-2])
        v.append(b * v[-1] + c * v[-2])
    return u[: n + 1], v[: n + 1]


def test_new_params_examples():
    p = new_params(1, 1)
    assert (p.disc, p.k2, p.odd_part) == (5, 0, 5)
    p = new_params(3, -2)
    assert (p.disc, p.k2, p.odd_part) == (1, 0, 1)
    p = new_params(2, 1)
    assert (p.disc, p.k2, p.odd_part) == (8, 3, 1)


@pytest.mark.parametrize("b,c", [(0, 5), (5, 0), (2, -1), (1, -1), (-2, -5)])
def test_new_params_rejects_degenerate(b, c):
    with pytest.raises(DegenerateSequence):
        new_params(b, c)


def test_alpha_log_value():
    p = new_params(1, 1)
    golden = (1 + math.sqrt(5)) / 2
    assert abs(p.alpha_abs_log - math.log(golden)) <= 1e-15
    # ln|alpha| is minimized over all nondegenerate pairs at (1, 1)
    for b in range(-10, 11):
        for c in range(-10, 11):
            if b and c and b * b + 4 * c > 0:
                assert new_params(b, c).alpha_abs_log >= p.alpha_abs_log - 1e-15


def test_term_pair_examples():
    fib = new_params(1, 1)
    assert (term_pair(fib, 12).u, term_pair(fib, 12).v) == (144, 322)
    assert (term_pair(fib, 0).u, term_pair(fib, 0).v) == (0, 2)
    mer = new_params(3, -2)
    assert (term_pair(mer, 5).u, term_pair(mer, 5).v) == (31, 33)


def test_term_pair_matches_naive_iteration():
    for b, c in [(1, 1), (2, 1), (3, -2), (-3, 5), (6, -2)]:
        p = new_params(b, c)
        us, vs = naive_terms(b, c, 1000)
        for n in (0, 1, 2, 17, 100, 999, 1000):
            t = term_pair(p, n)
            assert (t.u, t.v) == (us[n], vs[n]), (b, c, n)


def test_term_pair_mod_examples():
    fib = new_params(1, 1)
    assert term_pair_mod(fib, 8, 11) == (10, 3)
    assert term_pair_mod(fib, 0, 7) == (0, 2)
    mer = new_params(3, -2)
    assert term_pair_mod(mer, 10, 5) == (3, 0)


def test_term_pair_mod_huge_index():
    # closed form for (3, -2): u_n = 2^n - 1, v_n = 2^n + 1
    mer = new_params(3, -2)
    n = 10**800 + 7
    for q in (5, 11, 101, 999983):
        expect = (pow(2, n, q) - 1) % q, (pow(2, n, q) + 1) % q
        assert term_pair_mod(mer, n, q) == expect


def test_term_pair_mod_agrees_with_exact():
    rng = random.Random(42)
    for b, c in [(1, 1), (2, 1), (3, -2), (-4, 3)]:
        p = new_params(b, c)
        us, vs = naive_terms(b, c, 1000)
        for _ in range(80):
            n = rng.randrange(0, 1001)
            q = rng.randrange(2, 10**4)
            assert term_pair_mod(p, n, q) == (us[n] % q, vs[n] % q)


def test_successive_pair_mod():
    fib = new_params(1, 1)
    assert successive_pair_mod(fib, 10, 11) == (0, 1)  # Pisano period of 11
    assert successive_pair_mod(fib, 0, 7) == (0, 1)


def test_identities_hold():
    for b, c in [(1, 1), (2, 1), (3, -2), (5, -6), (-3, 2), (7, 4)]:
        p = new_params(b, c)
        for n in range(0, 201):
            assert verify_identities(p, n), (b, c, n)


def test_unit_discriminant_coprimality():
    # for b^2 + 4c = 1: u_n, v_n, c pairwise coprime at every index
    for b, c in [(3, -2), (5, -6), (7, -12), (9, -20), (17, -72)]:
        p = new_params(b, c)
        assert p.disc == 1
        for n in range(1, 201):
            t = term_pair(p, n)
            assert math.gcd(t.u, t.v) == 1
            assert math.gcd(t.u, c) == 1
            assert math.gcd(t.v, c) == 1
