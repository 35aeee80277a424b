"""Exact arithmetic for Lucas sequences u_n and their companions v_n.

A pair of nonzero integers (b, c) with b**2 + 4c > 0 defines

    u_n = b*u_{n-1} + c*u_{n-2},   u_0 = 0, u_1 = 1
    v_n = b*v_{n-1} + c*v_{n-2},   v_0 = 2, v_1 = b

Term values are always produced by exact 2x2 integer matrix powers of the
companion matrix of z**2 - b*z - c; the closed forms in the characteristic
roots are only ever used for float-level log bounds, never for term values.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .intarith import ord2


class DegenerateSequence(ValueError):
    """Parameters with b = 0, c = 0, or b**2 + 4c <= 0 are rejected."""


@dataclass(frozen=True)
class SequenceParams:
    """Recurrence coefficients plus derived characteristic-root data.

    disc = b**2 + 4c = 2**k2 * odd_part, and alpha_abs_log is the natural
    log of the dominant characteristic root's absolute value,
    (|b| + sqrt(disc)) / 2.
    """

    b: int
    c: int
    disc: int
    alpha_abs_log: float
    k2: int
    odd_part: int


def _log_dominant_root(b: int, disc: int) -> float:
    if disc.bit_length() <= 1000:
        return math.log((abs(b) + math.sqrt(disc)) / 2.0)
    # Huge discriminant: pull out an even power of 2 to stay in float range.
    shift = (disc.bit_length() - 100) // 2
    scaled = math.sqrt(disc >> (2 * shift))
    return math.log(abs(b) * 0.5 ** (shift + 1) + scaled / 2.0) + shift * math.log(2.0)


def new_params(b: int, c: int) -> SequenceParams:
    """Validate (b, c) and populate the derived fields."""
    if b == 0 or c == 0:
        raise DegenerateSequence(f"(b, c) = ({b}, {c}): coefficients must be nonzero")
    disc = b * b + 4 * c
    if disc <= 0:
        raise DegenerateSequence(f"(b, c) = ({b}, {c}): b^2 + 4c = {disc} is not positive")
    k2 = ord2(disc)
    return SequenceParams(
        b=b,
        c=c,
        disc=disc,
        alpha_abs_log=_log_dominant_root(b, disc),
        k2=k2,
        odd_part=disc >> k2,
    )


@dataclass(frozen=True)
class TermPair:
    """(u_n, v_n); satisfies disc*u**2 = v**2 - 4*(-c)**n."""

    n: int
    u: int
    v: int


def _mat_mul(x, y, q: int | None):
    a = x[0] * y[0] + x[1] * y[2]
    b = x[0] * y[1] + x[1] * y[3]
    c = x[2] * y[0] + x[3] * y[2]
    d = x[2] * y[1] + x[3] * y[3]
    if q is None:
        return (a, b, c, d)
    return (a % q, b % q, c % q, d % q)


def _companion_power(params: SequenceParams, n: int, q: int | None) -> tuple[int, int, int, int]:
    """M**n for M = [[b, c], [1, 0]], exactly or mod q."""
    result = (1, 0, 0, 1)
    base = (params.b, params.c, 1, 0)
    if q is not None:
        base = tuple(x % q for x in base)
    e = n
    while e:
        if e & 1:
            result = _mat_mul(result, base, q)
        base = _mat_mul(base, base, q)
        e >>= 1
    return result


def term_pair(params: SequenceParams, n: int) -> TermPair:
    """Exact (u_n, v_n) in O(log n) big-integer matrix squarings."""
    if n < 0:
        raise ValueError("index must be a natural number")
    m = _companion_power(params, n, None)
    u_n = m[2]  # M^n = [[u_{n+1}, c*u_n], [u_n, c*u_{n-1}]]
    u_next = m[0]
    return TermPair(n=n, u=u_n, v=2 * u_next - params.b * u_n)


def term_pair_mod(params: SequenceParams, n: int, q: int) -> tuple[int, int]:
    """(u_n mod q, v_n mod q); the index may be arbitrarily large."""
    if q < 2:
        raise ValueError("modulus must be >= 2")
    if n < 0:
        raise ValueError("index must be a natural number")
    m = _companion_power(params, n, q)
    u_n = m[2]
    return u_n, (2 * m[0] - params.b * u_n) % q


def successive_pair_mod(params: SequenceParams, n: int, q: int) -> tuple[int, int]:
    """(u_n mod q, u_{n+1} mod q), the state vector of the recurrence."""
    if q < 2:
        raise ValueError("modulus must be >= 2")
    m = _companion_power(params, n, q)
    return m[2], m[0]


def minus_c_pow(c: int, n: int) -> int:
    """(-c)**n computed by the parity of n (n may be huge)."""
    return c**n if n % 2 == 0 else -(c**n)


def minus_c_pow_mod(c: int, n: int, q: int) -> int:
    """(-c)**n mod q without forming c**n."""
    x = pow(c % q, n, q)
    return x if n % 2 == 0 else (-x) % q


def verify_identities(params: SequenceParams, n: int) -> bool:
    """Check u_{2n} = u_n*v_n and disc*u_n**2 = v_n**2 - 4*(-c)**n exactly."""
    t = term_pair(params, n)
    t2 = term_pair(params, 2 * n)
    if t2.u != t.u * t.v:
        return False
    return params.disc * t.u * t.u == t.v * t.v - 4 * minus_c_pow(params.c, n)
