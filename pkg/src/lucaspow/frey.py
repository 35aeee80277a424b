"""Frey curve case table for hypothetical perfect powers u_n = y^p.

Given a hypothesis that u_n is a p-th power, exactly one of nine parity/
2-adic configurations applies (writing disc = b^2 + 4c = 2^k * D with D odd,
and w = +-v_n with the sign fixed by the case's congruence condition).  Each
case carries a long-Weierstrass model, a discriminant formula, and a
conductor formula; ``check_delta_identity`` verifies model against formula
by exact integer algebra.

Because u_n = y^p makes y^{2p} = u_n^2, the discriminant formulas are
evaluated with u_n^2 / u_n^4 in place of y^{2p} / y^{4p}, so the identity
is checkable without a genuine power solution.

Errata in the source case table (forced by exact discriminant algebra and
confirmed symbolically; see docs/frey_cases.md): the quartic-discriminant
cases 2, 7, 8, 9 need u_n^2, not u_n, in the a4 coefficient, and case 4's
discriminant carries u_n^4 (i.e. y^{4p}), not u_n^2.  With those two
corrections every case's (model, Delta) pair is an exact identity.
"""

from __future__ import annotations

from dataclasses import dataclass

from .intarith import odd_radical, radical, squarefree_part
from .lucas import SequenceParams, minus_c_pow, new_params, term_pair
from math import gcd


class NoApplicableCase(ValueError):
    """No case's congruence conditions can be met for the hypothesis."""


class NonIntegralCoefficient(ArithmeticError):
    """A required exact division failed while instantiating a model."""


@dataclass(frozen=True)
class SolutionHypothesis:
    """A hypothetical solution u_n = y^p at index n.

    (u, v) always satisfy disc*u^2 = v^2 - 4*(-c)^n.  The parity of the
    hypothetical y equals the parity of u_n (odd y^p is odd); it is stored
    explicitly so tests can probe impossible configurations.
    """

    params: SequenceParams
    n: int
    u: int
    v: int
    y_parity_even: bool


def hypothesis(
    params: SequenceParams,
    n: int,
    y_parity_even: bool | None = None,
    allow_small_n: bool = False,
) -> SolutionHypothesis:
    """Build a SolutionHypothesis from the sequence itself."""
    if n < 7 and not allow_small_n:
        raise ValueError("case table applies for n >= 7 (pass allow_small_n to override)")
    t = term_pair(params, n)
    if y_parity_even is None:
        y_parity_even = t.u % 2 == 0
    return SolutionHypothesis(params=params, n=n, u=t.u, v=t.v, y_parity_even=y_parity_even)


@dataclass(frozen=True)
class ConductorFormula:
    """Symbolic conductor 2^two_exponent * rad(radical_argument * y).

    two_exponent is surfaced exactly as tabulated, including the negative
    exponent -1 in the k = 8 branch of case 9.
    """

    two_exponent: int
    radical_argument: int

    def describe(self) -> str:
        return f"2^{self.two_exponent} * rad({self.radical_argument} * y)"


@dataclass(frozen=True)
class FreyCase:
    """A selected case: id 1..9, its conditions, and the resolved sign."""

    id: int
    description: str
    alpha_exponent: int
    w_sign: int


@dataclass(frozen=True)
class FreyModel:
    """Long Weierstrass model Y^2 + a1 XY + a3 Y = X^3 + a2 X^2 + a4 X + a6."""

    a1: int
    a2: int
    a3: int
    a4: int
    a6: int
    case_id: int
    w_sign: int
    paper_delta: int
    conductor_formula: ConductorFormula

    def coefficients(self) -> tuple[int, int, int, int, int]:
        return (self.a1, self.a2, self.a3, self.a4, self.a6)


_CASE_TEXT = {
    1: "disc odd (k=0), c odd, y odd, w = +-v odd with w = -(-c)^n (mod 4)",
    2: "disc = 0 or 1 (mod 4), c odd, y even, w = +-v = 2*wh with wh = 1 (mod 4)",
    3: "disc odd (k=0), c even, y odd, w = +-v odd with w = 1 (mod 4)",
    4: "k = 2, y odd, D = -1 (mod 4), w = v",
    5: "k = 2, y odd, D = 1 (mod 4), w = v",
    6: "k = 3, y odd, w = v = 2*wh",
    7: "k = 4, y odd, w = +-v = 2*wh with wh = -D (mod 4)",
    8: "k = 5, 6, or 7, y odd, w = +-v = 2*wh with wh = 1 (mod 4)",
    9: "k >= 8, y odd, w = +-v = 2*wh with wh = 1 (mod 4)",
}


def _sign_for_odd_target(value: int, target_mod4: int) -> int | None:
    """Sign s with s*value = target (mod 4), for odd value and odd target."""
    if value % 2 == 0:
        return None
    if value % 4 == target_mod4 % 4:
        return 1
    if (-value) % 4 == target_mod4 % 4:
        return -1
    return None


def select_case(h: SolutionHypothesis) -> FreyCase:
    """First case (printed order 1..9) whose conditions are satisfiable.

    Requires gcd(b, c) = 1; the non-coprime route only enters through
    ``conductor_bound_noncoprime``.
    """
    p = h.params
    if gcd(p.b, p.c) != 1:
        raise ValueError("case table requires gcd(b, c) = 1")
    k = p.k2
    d_mod4 = p.odd_part % 4
    c_odd = p.c % 2 != 0
    y_odd = not h.y_parity_even
    v = h.v
    m4 = pow(-p.c, h.n, 4)

    # case 1
    if p.disc % 4 == 1 and c_odd and y_odd:
        sign = _sign_for_odd_target(v, (-m4) % 4)
        if sign is not None:
            return FreyCase(1, _CASE_TEXT[1], 1 if m4 == 3 else 2, sign)
    # case 2
    if p.disc % 4 in (0, 1) and c_odd and h.y_parity_even and v % 2 == 0:
        sign = _sign_for_odd_target(v // 2, 1)
        if sign is not None:
            return FreyCase(2, _CASE_TEXT[2], 0, sign)
    # case 3
    if p.disc % 4 == 1 and not c_odd and y_odd:
        sign = _sign_for_odd_target(v, 1)
        if sign is not None:
            return FreyCase(3, _CASE_TEXT[3], 0, sign)
    # cases 4-9 all need y odd
    if y_odd:
        if k == 2 and d_mod4 == 3:
            return FreyCase(4, _CASE_TEXT[4], 5, 1)
        if k == 2 and d_mod4 == 1:
            return FreyCase(5, _CASE_TEXT[5], 5, 1)
        if k == 3 and v % 2 == 0:
            return FreyCase(6, _CASE_TEXT[6], 6, 1)
        if k == 4 and v % 2 == 0:
            sign = _sign_for_odd_target(v // 2, (-p.odd_part) % 4)
            if sign is not None:
                return FreyCase(7, _CASE_TEXT[7], 1 if d_mod4 == 3 else 2, sign)
        if k in (5, 6, 7) and v % 2 == 0:
            sign = _sign_for_odd_target(v // 2, 1)
            if sign is not None:
                return FreyCase(8, _CASE_TEXT[8], 4 if k == 5 else 2, sign)
        if k >= 8 and v % 2 == 0:
            sign = _sign_for_odd_target(v // 2, 1)
            if sign is not None:
                return FreyCase(9, _CASE_TEXT[9], -1 if k == 8 else 0, sign)
    raise NoApplicableCase(
        f"no case matches (b, c) = ({p.b}, {p.c}), n = {h.n}, "
        f"y {'even' if h.y_parity_even else 'odd'} (k = {k})"
    )


def _exact_div(num: int, den: int, what: str) -> int:
    if num % den:
        raise NonIntegralCoefficient(f"{what}: {num} is not divisible by {den}")
    return num // den


def build_model(h: SolutionHypothesis, case: FreyCase) -> FreyModel:
    """Instantiate the case's Weierstrass model; every division is checked."""
    p = h.params
    n, u = h.n, h.u
    s, d, k = p.disc, p.odd_part, p.k2
    m = minus_c_pow(p.c, n)
    w = case.w_sign * h.v
    u2 = u * u
    cid = case.id

    if cid == 1:
        a = (0, w, 0, m, 0)
        delta = 16 * m * m * s * u2
        cond = ConductorFormula(case.alpha_exponent, 2 * p.c * s)
    elif cid == 2:
        wh = _exact_div(w, 2, "case 2 w/2")
        a = (1, _exact_div(wh - 1, 4, "case 2 (wh-1)/4"), 0,
             _exact_div(s * u2, 256, "case 2 a4"), 0)
        delta = _exact_div(s * s * m * u2 * u2, 65536, "case 2 delta")
        cond = ConductorFormula(0, p.c * s)
    elif cid == 3:
        a = (1, _exact_div(w - 1, 4, "case 3 (w-1)/4"), 0,
             _exact_div(m, 16, "case 3 a4"), 0)
        delta = _exact_div(m * m * s * u2, 256, "case 3 delta")
        cond = ConductorFormula(0, p.c * s)
    elif cid == 4:
        a = (0, w, 0, d * u2, 0)
        delta = 64 * d * d * m * u2 * u2
        cond = ConductorFormula(5, p.c * d)
    elif cid == 5:
        a = (0, w, 0, m, 0)
        delta = 64 * d * m * m * u2
        cond = ConductorFormula(5, p.c * d)
    elif cid == 6:
        a = (0, w, 0, 2 * d * u2, 0)
        delta = 256 * d * d * m * u2 * u2
        cond = ConductorFormula(6, 2 * p.c * d)
    elif cid == 7:
        wh = _exact_div(w, 2, "case 7 w/2")
        a = (0, wh, 0, d * u2, 0)
        delta = 16 * d * d * m * u2 * u2
        cond = ConductorFormula(case.alpha_exponent, 2 * p.c * d)
    elif cid == 8:
        wh = _exact_div(w, 2, "case 8 w/2")
        a = (0, wh, 0, (1 << (k - 4)) * d * u2, 0)
        delta = (1 << (2 * k - 4)) * d * d * m * u2 * u2
        cond = ConductorFormula(case.alpha_exponent, 2 * p.c * d)
    elif cid == 9:
        wh = _exact_div(w, 2, "case 9 w/2")
        a = (1, _exact_div(wh - 1, 4, "case 9 (wh-1)/4"), 0,
             (1 << (k - 8)) * d * u2, 0)
        delta = (1 << (2 * k - 16)) * d * d * m * u2 * u2
        cond = ConductorFormula(case.alpha_exponent, 2 * p.c * d)
    else:
        raise ValueError(f"unknown case id {cid}")

    return FreyModel(*a, case_id=cid, w_sign=case.w_sign, paper_delta=delta,
                     conductor_formula=cond)


def model_discriminant(model: FreyModel) -> int:
    """Standard discriminant of the long Weierstrass quintuple."""
    a1, a2, a3, a4, a6 = model.coefficients()
    b2 = a1 * a1 + 4 * a2
    b4 = 2 * a4 + a1 * a3
    b6 = a3 * a3 + 4 * a6
    b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
    return -b2 * b2 * b8 - 8 * b4**3 - 27 * b6 * b6 + 9 * b2 * b4 * b6


def check_delta_identity(h: SolutionHypothesis, case: FreyCase) -> bool:
    """Master self-check: model discriminant == tabulated Delta, exactly."""
    model = build_model(h, case)
    return model_discriminant(model) == model.paper_delta


def conductor_bound(params: SequenceParams) -> int:
    """Solution-independent conductor bound 2^8 * rad'(c) * rad'(b^2+4c)."""
    return 256 * odd_radical(params.c) * odd_radical(params.disc)


def conductor_bound_noncoprime(params: SequenceParams) -> int:
    """Sharper per-case bound 2^8 * rad'(A')^2 * rad'(c*(b^2+4c)/A^2) for
    A = gcd(b, c) > 1, A' the squarefree part of A.

    For coprime (b, c) this coincides with ``conductor_bound`` up to the
    shared rad' factors, so callers normally branch on gcd(b, c).
    """
    a = gcd(params.b, params.c)
    if a == 1:
        return conductor_bound(params)
    a_prime = squarefree_part(a)
    num = params.c * params.disc
    if num % (a * a):
        raise NonIntegralCoefficient(f"A^2 = {a * a} does not divide c*(b^2+4c) = {num}")
    return 256 * odd_radical(a_prime) ** 2 * odd_radical(num // (a * a))


def search_unit_discriminant_sequences(bound_on_b: int) -> list[tuple[int, int]]:
    """All (b, c) with 3 <= b <= bound_on_b odd, b^2 + 4c = 1, and
    rad(c) in {2, 6, 10, 22}.

    These are the parameter pairs whose power-free proof closes at a level
    with no newforms; the search is exhaustive over the stated b range.
    """
    hits = []
    for b in range(3, bound_on_b + 1, 2):
        c = (1 - b * b) // 4
        if radical(c) in (2, 6, 10, 22):
            hits.append((b, c))
    return hits


def default_hypothesis_pair(b: int, c: int, n: int) -> SolutionHypothesis:
    """Convenience: params + hypothesis in one step (used by the CLI)."""
    return hypothesis(new_params(b, c), n, allow_small_n=True)
