"""Bound pipeline: dimensions, the two exponent bounds, Thue machinery."""

import json
import math
import random

import pytest

from lucaspow.bounds import (
    SHARP_P_BOUND_SMALL_COPRIME,
    EmptyList,
    EmptyNorms,
    av_bound,
    combined_bound,
    dim_s2_new,
    ell_bound,
    ell_bound_sharp,
    genus_x0,
    irrational_coeff_prime_bound,
    lemma46_gcd,
    p_from_n_bound,
    smooth_index_bound,
    sturm_bound,
    thue_form,
    thue_index_bound,
)
from lucaspow.intarith import dedekind_psi, factorize
from lucaspow.lucas import new_params
from lucaspow.sieve import scan_powers

# classical genus values for X0(N)
KNOWN_GENUS = {1: 0, 2: 0, 6: 0, 10: 0, 11: 1, 14: 1, 15: 1, 17: 1, 20: 1,
               22: 2, 23: 2, 37: 2, 50: 2, 100: 7, 389: 32}


def test_genus_known_values():
    for n, g in KNOWN_GENUS.items():
        assert genus_x0(n) == g, n


def test_dims_examples():
    for n in (2, 6, 10, 22):
        assert dim_s2_new(n) == 0
    assert dim_s2_new(11) == 1
    assert dim_s2_new(1) == 0


def test_dim_inequality_and_inversion():
    from lucaspow.bounds import _divisors, _sigma0

    for n in range(1, 2001):
        d = dim_s2_new(n)
        assert d >= 0
        assert 12 * d <= 12 + dedekind_psi(n)
    rng = random.Random(6)
    for n in rng.sample(range(1, 2001), 200):
        total = sum(_sigma0(n // d) * dim_s2_new(d) for d in _divisors(n))
        assert total == genus_x0(n)


def test_sturm_examples():
    assert sturm_bound(11, 2) == 2
    assert sturm_bound(1, 12) == 1
    assert sturm_bound(256, 2) == 64


def test_irrational_window():
    assert irrational_coeff_prime_bound(1280) == 383
    assert irrational_coeff_prime_bound(2) == 0
    assert irrational_coeff_prime_bound(256) == 61


def test_av_bound():
    assert av_bound(256) == 384**33
    assert av_bound(1) == 1
    assert av_bound(1280) == 2304**193


def test_lemma46_combinator():
    assert lemma46_gcd(2, 1, [1, 1, 1, 1, 1]) == 2
    assert lemma46_gcd(3, 5, [2, 1, 1, 1, 1, 1, 1]) == 30
    assert lemma46_gcd(3, 5, [2, 0, 1]) == 0
    with pytest.raises(EmptyNorms):
        lemma46_gcd(2, 1, [])


def test_smooth_index_bound():
    assert smooth_index_bound([2, 3, 5]) == 30
    assert smooth_index_bound([2, 257]) == 258
    assert smooth_index_bound([29]) == 30
    with pytest.raises(EmptyList):
        smooth_index_bound([])


def test_p_from_n_examples():
    assert p_from_n_bound(new_params(1, 1), 12) == 24
    assert p_from_n_bound(new_params(3, -2), 1) == 3
    assert p_from_n_bound(new_params(1, 1), 1) == 2


def test_p_from_n_dominates_actual_powers():
    for b, c in [(1, 1), (2, 1), (9, -20), (64, 3)]:
        params = new_params(b, c)
        for n, y, p in scan_powers(params, 500):
            assert p <= p_from_n_bound(params, n), (b, c, n, y, p)


def test_ell_bound_examples():
    assert ell_bound(new_params(3, -2)) == 713
    assert ell_bound(new_params(1, 1)) == 2466
    # the largest-prime variant is never larger than the N+1 variant
    for b, c in [(1, 1), (2, 1), (3, -2), (5, -6), (7, 3)]:
        params = new_params(b, c)
        assert 17 <= ell_bound_sharp(params) <= ell_bound(params)


def test_combined_bound_pipeline():
    rep = combined_bound(new_params(3, -2))
    assert rep.n_level == 256
    assert rep.psi_n == 384
    assert rep.ell == 713
    assert rep.av == 384**33
    assert rep.final_p == 384**33
    assert rep.largest_prime_of_n == 2
    assert combined_bound(new_params(1, 1)).final_p == 2304**193
    assert combined_bound(new_params(2, 1)).final_p >= 17


def test_conductor_level_monotone():
    # enlarging |c| or |b^2+4c| through extra odd prime content never
    # decreases N (the full report is not built here: the AV term for
    # composite levels this large would have millions of digits)
    from lucaspow.frey import conductor_bound

    base = conductor_bound(new_params(1, 1))
    assert conductor_bound(new_params(1, 3)) >= base
    assert conductor_bound(new_params(1, 11)) >= base
    ns = [conductor_bound(new_params(1, c)) for c in (1, 5, 35, 385)]
    assert ns == sorted(ns)


def test_bound_report_json_roundtrip():
    rep = combined_bound(new_params(3, -2))
    blob = rep.as_json_dict()
    again = json.loads(json.dumps(blob))
    assert again == blob
    assert again["N"] == "256" and again["psiN"] == "384"
    assert int(again["avBound"]) == 384**33


def test_sharp_bound_table():
    assert SHARP_P_BOUND_SMALL_COPRIME[(3, 1)] == 17
    assert SHARP_P_BOUND_SMALL_COPRIME[(3, 2)] == 19
    assert (4, 2) not in SHARP_P_BOUND_SMALL_COPRIME
    assert all(math.gcd(b, c) == 1 for b, c in SHARP_P_BOUND_SMALL_COPRIME)


def eval_printed_sums(b, p, x, y):
    """Independent oracle: evaluate the two tabulated sums term by term."""
    total = 0
    for k in range(p // 2 + 1):
        base = (-4) ** ((p - 2 * k - 1) // 2)
        total += b * base * math.comb(p, 2 * k) * x ** (2 * k) * y ** (p - 2 * k)
        total += base * math.comb(p, 2 * k + 1) * x ** (2 * k + 1) * y ** (p - 2 * k - 1)
    return total


def test_thue_form_examples():
    form = thue_form(new_params(3, 1), 5)
    assert form.coefficients[(0, 5)] == 48
    assert form.coefficients[(5, 0)] == 1
    assert form.evaluate(0, 1) == 48
    assert all(i + j == 5 for i, j in form.coefficients)


def test_thue_form_against_direct_expansion():
    rng = random.Random(7)
    for b in (1, 3, 5, 10):
        params = new_params(b, 1)
        for p in (3, 5, 7):
            form = thue_form(params, p)
            for _ in range(40):
                x = rng.randrange(-100, 101)
                y = rng.randrange(-100, 101)
                assert form.evaluate(x, y) == eval_printed_sums(b, p, x, y)


def test_thue_index_bound():
    assert thue_index_bound(new_params(3, 1), 5, 10) == 15
    assert thue_index_bound(new_params(3, 1), 17, 10**56) < 10**800
    assert thue_index_bound(new_params(5, 1), 3, 1) >= 1
    # monotone in the height bound
    params = new_params(3, 1)
    vals = [thue_index_bound(params, 5, bb) for bb in (1, 10, 10**3, 10**40)]
    assert vals == sorted(vals)


def test_bounds_dominate_small_known_powers():
    # the final exponent bound clears every exponent the scanner actually finds
    for b, c in [(1, 1), (2, 1), (9, -20)]:
        params = new_params(b, c)
        rep = combined_bound(params)
        for _, _, p in scan_powers(params, 300):
            assert p <= rep.final_p
