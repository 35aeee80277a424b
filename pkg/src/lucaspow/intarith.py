"""Shared integer arithmetic: factorization, radicals, Dedekind psi, roots, CRT.

Everything here is exact big-integer arithmetic.  Factorization is trial
division over a cached prime wheel (primes below 10**6) followed by Brent's
variant of Pollard rho for any remaining cofactor, which is plenty for the
conductor-sized and sieve-sized inputs this package produces.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from functools import lru_cache


class ZeroArgument(ValueError):
    """Raised when an operation that needs a nonzero integer receives 0."""


_WHEEL_LIMIT = 10**6
_wheel: list[int] | None = None


def _prime_wheel() -> list[int]:
    """Primes below 10**6, sieved once and shared read-only."""
    global _wheel
    if _wheel is None:
        sieve = bytearray(b"\x01") * _WHEEL_LIMIT
        sieve[0:2] = b"\x00\x00"
        for i in range(2, math.isqrt(_WHEEL_LIMIT) + 1):
            if sieve[i]:
                start = i * i
                sieve[start::i] = b"\x00" * ((_WHEEL_LIMIT - start - 1) // i + 1)
        _wheel = [i for i, fl in enumerate(sieve) if fl]
    return _wheel


def primes_up_to(n: int) -> list[int]:
    """All primes <= n (sieve; n may exceed the wheel limit)."""
    if n < 2:
        return []
    if n < _WHEEL_LIMIT:
        wheel = _prime_wheel()
        import bisect

        return wheel[: bisect.bisect_right(wheel, n)]
    sieve = bytearray(b"\x01") * (n + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, math.isqrt(n) + 1):
        if sieve[i]:
            start = i * i
            sieve[start :: i] = b"\x00" * ((n - start) // i + 1)
    return [i for i, fl in enumerate(sieve) if fl]


# Deterministic Miller-Rabin witness sets (Sinclair / Feitsma tables).
_MR_SMALL = (2, 3, 5, 7, 11, 13, 17)  # valid below 3.4e14
_MR_LARGE = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)  # valid below 3.3e24


def is_prime(n: int) -> bool:
    """Primality test: wheel lookup, then Miller-Rabin.

    Deterministic below 3.3e24; above that the 12 fixed witnesses make a
    false positive astronomically unlikely (inputs that large never feed
    the formulas that need certainty).
    """
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    r = (d & -d).bit_length() - 1
    d >>= r
    witnesses = _MR_SMALL if n < 3_400_000_000_000_000 else _MR_LARGE
    for a in witnesses:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_brent(n: int) -> int:
    """A nontrivial factor of composite odd n (Brent's cycle variant)."""
    if n % 2 == 0:
        return 2
    rng = random.Random(0xC0FFEE ^ n)
    while True:
        y = rng.randrange(1, n)
        c = rng.randrange(1, n)
        m = 128
        g = r = q = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r <<= 1
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


@dataclass(frozen=True)
class Factorization:
    """Prime factorization of |m| as increasing (prime, exponent) pairs."""

    pairs: tuple[tuple[int, int], ...]

    def value(self) -> int:
        out = 1
        for p, e in self.pairs:
            out *= p**e
        return out

    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.pairs)


def factorize(m: int) -> Factorization:
    """Factor |m|; m must be nonzero."""
    if m == 0:
        raise ZeroArgument("cannot factor 0")
    m = abs(m)
    found: dict[int, int] = {}
    for p in _prime_wheel():
        if p * p > m:
            break
        while m % p == 0:
            found[p] = found.get(p, 0) + 1
            m //= p
    # remaining cofactor is 1, a prime, or a product of primes > 10**6
    stack = [m] if m > 1 else []
    while stack:
        x = stack.pop()
        if x == 1:
            continue
        if is_prime(x):
            found[x] = found.get(x, 0) + 1
            continue
        d = _pollard_brent(x)
        stack.append(d)
        stack.append(x // d)
    return Factorization(tuple(sorted(found.items())))


def radical(m: int) -> int:
    """Product of the distinct primes dividing |m|; radical(+-1) = 1."""
    if m == 0:
        raise ZeroArgument("radical(0) undefined")
    out = 1
    for p in factorize(m).primes():
        out *= p
    return out


def odd_radical(m: int) -> int:
    """Product of the distinct odd primes dividing |m|."""
    if m == 0:
        raise ZeroArgument("odd_radical(0) undefined")
    out = 1
    for p in factorize(m).primes():
        if p != 2:
            out *= p
    return out


def dedekind_psi(n: int) -> int:
    """psi(n) = n * prod_{p | n} (1 + 1/p), exact."""
    if n < 1:
        raise ValueError("dedekind_psi needs n >= 1")
    out = n
    for p in factorize(n).primes() if n > 1 else ():
        out = out // p * (p + 1)
    return out


def ord2(m: int) -> int:
    """Exact 2-adic valuation of m != 0."""
    if m == 0:
        raise ZeroArgument("ord2(0) undefined")
    return ((m if m > 0 else -m) & -(m if m > 0 else -m)).bit_length() - 1


def squarefree_part(m: int) -> int:
    """The squarefree m' with m = m' * s**2, sign preserved."""
    if m == 0:
        raise ZeroArgument("squarefree_part(0) undefined")
    out = 1
    for p, e in factorize(m).pairs:
        if e % 2:
            out *= p
    return out if m > 0 else -out


def integer_root(x: int, k: int) -> tuple[int, bool]:
    """(floor(x ** (1/k)), exactness) for x >= 0, k >= 1.

    Newton iteration on integers from a bit-length start, then exact
    correction, so root**k <= x < (root+1)**k always.
    """
    if x < 0:
        raise ValueError("integer_root needs x >= 0")
    if k < 1:
        raise ValueError("integer_root needs k >= 1")
    if k == 1 or x < 2:
        return x, True
    if k == 2:
        r = math.isqrt(x)
        return r, r * r == x
    if k >= x.bit_length():
        # 2**k > x, so the root is 1
        return 1, x == 1
    r = 1 << -(-x.bit_length() // k)  # 2**ceil(bits/k) >= true root
    while True:
        nxt = ((k - 1) * r + x // r ** (k - 1)) // k
        if nxt >= r:
            break
        r = nxt
    while r**k > x:
        r -= 1
    while (r + 1) ** k <= x:
        r += 1
    return r, r**k == x


def perfect_power_split(x: int) -> tuple[int, int] | None:
    """If x >= 2 is a perfect p-th power for a prime p, return (y, p).

    p is the largest prime exponent that works; callers wanting every
    admissible exponent re-check the smaller primes themselves.
    """
    if x < 2:
        raise ValueError("perfect_power_split needs x >= 2")
    for p in reversed(primes_up_to(x.bit_length())):
        root, exact = integer_root(x, p)
        if exact:
            return root, p
    return None


def crt_combine(r1: int, m1: int, r2: int, m2: int) -> tuple[int, int] | None:
    """Combine x = r1 (mod m1), x = r2 (mod m2).

    Returns (r, lcm(m1, m2)) with 0 <= r < lcm, or None when the pair is
    incompatible (r1 != r2 modulo gcd(m1, m2)).
    """
    if m1 < 1 or m2 < 1:
        raise ValueError("moduli must be >= 1")
    g = math.gcd(m1, m2)
    if (r2 - r1) % g:
        return None
    l = m1 // g * m2
    m1g = m1 // g
    m2g = m2 // g
    t = ((r2 - r1) // g * pow(m1g, -1, m2g)) % m2g
    return (r1 + m1 * t) % l, l


@lru_cache(maxsize=None)
def largest_prime_le(x: int) -> int:
    """Largest prime <= x, or 0 when there is none (x < 2)."""
    if x < 2:
        return 0
    n = int(x)
    if n % 2 == 0 and n != 2:
        n -= 1
    while n >= 2:
        if is_prime(n):
            return n
        n -= 2 if n > 3 else 1
    return 0
