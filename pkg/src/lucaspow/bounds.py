"""Exponent-bound pipeline: newform-space dimensions, the abelian-variety
and elliptic-curve bounds, their assembly into one maximum admissible prime,
and the Thue-form machinery that converts an exponent bound into an index
bound.

Every log-based bound is computed in double precision, nudged up by one ulp,
and then ceiled: a bound that is accidentally small is a correctness bug,
one that is slightly large only costs time.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .frey import conductor_bound
from .intarith import dedekind_psi, factorize, largest_prime_le
from .lucas import SequenceParams


class EmptyNorms(ValueError):
    """The per-prime norm combinator needs at least one norm value."""


class EmptyList(ValueError):
    """The smooth-index bound needs a nonempty prime set."""


def _ceil_up(x: float) -> int:
    """Ceiling after a one-ulp upward nudge (directed rounding)."""
    return math.ceil(math.nextafter(x, math.inf))


# ---------------------------------------------------------------------------
# dimension formulas for X0(N)


def _nu2(pairs) -> int:
    out = 1
    for p, e in pairs:
        if p == 2:
            if e >= 2:
                return 0
            continue  # factor 1
        r = p % 4
        if r == 1:
            out *= 2
        elif r == 3:
            return 0
    return out


def _nu3(pairs) -> int:
    out = 1
    for p, e in pairs:
        if p == 3:
            if e >= 2:
                return 0
            continue  # factor 1
        r = p % 3
        if r == 1:
            out *= 2
        elif r == 2:
            return 0
    return out


def _euler_phi(n: int) -> int:
    out = n
    for p, _ in factorize(n).pairs if n > 1 else ():
        out = out // p * (p - 1)
    return out


def _nu_inf(n: int) -> int:
    out = 0
    for d in _divisors(n):
        out += _euler_phi(math.gcd(d, n // d))
    return out


def _divisors(n: int) -> list[int]:
    divs = [1]
    for p, e in factorize(n).pairs if n > 1 else ():
        divs = [d * p**i for d in divs for i in range(e + 1)]
    return sorted(divs)


@lru_cache(maxsize=None)
def genus_x0(n: int) -> int:
    """Genus of X0(N) = dim S_2(Gamma_0(N)), by the classical formula
    1 + psi(N)/12 - nu2/4 - nu3/3 - nu_inf/2 with exact rational arithmetic.
    """
    if n < 1:
        raise ValueError("level must be >= 1")
    if n == 1:
        return 0
    pairs = factorize(n).pairs
    g = (
        1
        + Fraction(dedekind_psi(n), 12)
        - Fraction(_nu2(pairs), 4)
        - Fraction(_nu3(pairs), 3)
        - Fraction(_nu_inf(n), 2)
    )
    assert g.denominator == 1, f"genus formula not integral at N={n}"
    return int(g)


@lru_cache(maxsize=None)
def _sigma0(n: int) -> int:
    out = 1
    for _, e in factorize(n).pairs if n > 1 else ():
        out *= e + 1
    return out


@lru_cache(maxsize=None)
def dim_s2_new(n: int) -> int:
    """Dimension of the new subspace of S_2(Gamma_0(N)).

    Obtained from the genus by inverting the old/new divisor sum
    genus(N) = sum_{d | N} sigma0(N/d) * dim_new(d).
    """
    total = genus_x0(n)
    for d in _divisors(n):
        if d != n:
            total -= _sigma0(n // d) * dim_s2_new(d)
    return total


def sturm_bound(n: int, k: int) -> int:
    """Coefficient index floor((k/12) * psi(N)) past which weight-k forms
    of level N that agree must be equal."""
    if n < 1 or k < 1:
        raise ValueError("level and weight must be >= 1")
    return k * dedekind_psi(n) // 12


def irrational_coeff_prime_bound(n: int) -> int:
    """Largest prime <= psi(N)/6, the window in which an irrational newform
    of level N must show a non-rational coefficient; 0 if the window is
    empty."""
    if n < 1:
        raise ValueError("level must be >= 1")
    return largest_prime_le(dedekind_psi(n) // 6)


# ---------------------------------------------------------------------------
# the two exponent bounds and their assembly


def av_bound(n: int) -> int:
    """psi(N) ** (floor(psi(N)/12) + 1), the maximum prime that can arise
    from a higher-dimensional modular abelian variety of level N."""
    if n < 1:
        raise ValueError("level must be >= 1")
    psi = dedekind_psi(n)
    return psi ** (psi // 12 + 1)


def lemma46_gcd(ell: int, norms_b: int, norms_c: list[int]) -> int:
    """Single-prime contribution ell * B * prod(C_r) to the congruence gcd.

    The caller supplies the externally computed norm values (this package
    does not compute newform Fourier coefficients) and gcds contributions
    across several ell.  A zero product signals "no information from this
    ell".
    """
    if not norms_c:
        raise EmptyNorms("need at least one norm value N(c_ell - r)")
    out = ell * norms_b
    for x in norms_c:
        out *= x
    return out


def smooth_index_bound(primes: list[int]) -> int:
    """max(30, max(primes) + 1): past this index no term of the sequence
    factors over the given prime set."""
    if not primes:
        raise EmptyList("need at least one prime")
    return max(30, max(primes) + 1)


def p_from_n_bound(params: SequenceParams, n: int) -> int:
    """ceil(4 * n * log|alpha|): any p with u_n = y^p is at most this."""
    if n < 1:
        raise ValueError("index must be >= 1")
    return _ceil_up(4.0 * n * params.alpha_abs_log)


def ell_bound(params: SequenceParams) -> int:
    """max(17, ceil(4*log|alpha| * max(30, N+1))) with N the conductor bound."""
    n_bound = conductor_bound(params)
    return max(17, _ceil_up(4.0 * params.alpha_abs_log * max(30, n_bound + 1)))


def ell_bound_sharp(params: SequenceParams) -> int:
    """The elliptic-curve bound driven only by the largest prime of N."""
    n_bound = conductor_bound(params)
    q = max(factorize(n_bound).primes())
    return max(17, _ceil_up(4.0 * params.alpha_abs_log * max(30, q + 1)))


@dataclass(frozen=True)
class BoundReport:
    """Every intermediate quantity of the assembled exponent bound."""

    n_level: int
    psi_n: int
    av: int
    ell: int
    ell_sharp: int
    final_p: int
    largest_prime_of_n: int

    def as_json_dict(self) -> dict:
        return {
            "schema": "lucaspow/bound-report/v1",
            "N": str(self.n_level),
            "psiN": str(self.psi_n),
            "avBound": str(self.av),
            "ellBound": str(self.ell),
            "ellBoundSharp": str(self.ell_sharp),
            "finalP": str(self.final_p),
            "largestPrimeOfN": str(self.largest_prime_of_n),
        }


def combined_bound(params: SequenceParams) -> BoundReport:
    """Assemble N, psi(N), both bounds, and final_p = max(17, av, ell)."""
    n_level = conductor_bound(params)
    av = av_bound(n_level)
    ell = ell_bound(params)
    return BoundReport(
        n_level=n_level,
        psi_n=dedekind_psi(n_level),
        av=av,
        ell=ell,
        ell_sharp=ell_bound_sharp(params),
        final_p=max(17, av, ell),
        largest_prime_of_n=max(factorize(n_level).primes()),
    )


# ---------------------------------------------------------------------------
# sharp small-parameter exponent bounds (precomputed data, not recomputed)

SHARP_P_BOUND_SMALL_COPRIME = {
    (b, c): (17 if c == 1 else 19)
    for b in range(1, 11)
    for c in range(1, 11)
    if math.gcd(b, c) == 1
}
"""Sharp admissible-exponent bounds for coprime 1 <= b, c <= 10: p <= 19,
improving to p <= 17 when c = 1.  Shipped as data; recomputing them needs
newform coefficient tables that are outside this package's scope."""


# ---------------------------------------------------------------------------
# Thue machinery


@dataclass(frozen=True)
class ThueForm:
    """Homogeneous degree-p integer form whose units correspond to odd-index
    power solutions; coefficients keyed by monomial (i, j) with i + j = p."""

    p: int
    b: int
    coefficients: dict[tuple[int, int], int]

    def evaluate(self, x: int, y: int) -> int:
        return sum(c * x**i * y**j for (i, j), c in self.coefficients.items())


def thue_form(params: SequenceParams, p: int) -> ThueForm:
    """Coefficient map of the degree-p form

        b * sum_k (-4)^((p-2k-1)/2) C(p, 2k)   X^(2k)   Y^(p-2k)
          + sum_k (-4)^((p-2k-1)/2) C(p, 2k+1) X^(2k+1) Y^(p-2k-1)

    for odd prime p, both sums over 0 <= k <= floor(p/2)."""
    if p < 3 or p % 2 == 0:
        raise ValueError("need an odd prime exponent")
    coeffs: dict[tuple[int, int], int] = {}
    for k in range(p // 2 + 1):
        base = (-4) ** ((p - 2 * k - 1) // 2)
        coeffs[(2 * k, p - 2 * k)] = params.b * base * math.comb(p, 2 * k)
        if 2 * k + 1 <= p:
            coeffs[(2 * k + 1, p - 2 * k - 1)] = base * math.comb(p, 2 * k + 1)
    return ThueForm(p=p, b=params.b, coefficients=coeffs)


def thue_index_bound(params: SequenceParams, p: int, bound_b: int) -> int:
    """Index bound ceil(log(sqrt(5^p * d) * B^p + sqrt(d)) / log|alpha|)
    from a Thue-solution height bound B, with d = b^2 + 4c.

    Computed in log space with directed upward rounding so gigantic B are
    fine.
    """
    if bound_b < 1:
        raise ValueError("height bound must be >= 1")
    d = params.disc
    # log of the main term sqrt(5^p * d) * B^p
    main = 0.5 * (p * math.log(5.0) + math.log(d)) + p * math.log(bound_b)
    # log(main_term + sqrt(d)) = main + log1p(sqrt(d)/main_term); the ratio
    # is exp(-(p/2)log5 - p log B) <= 5**(-3/2), so the exp never overflows
    total = main + math.log1p(math.exp(0.5 * math.log(d) - main))
    return _ceil_up(total / params.alpha_abs_log)
