"""Elementary congruence sieve for p-th powers in a Lucas sequence.

For primes q with q - 1 dividing a smooth modulus M and the discriminant a
nonzero square mod q, the state period K(q) of (u_n, u_{n+1}) mod q divides
q - 1.  Indices n with u_n a p-th power in F_q form a residue set mod K(q);
intersecting those sets across many q by CRT grows a combined modulus K(S)
while thinning the surviving residues toward the trivial classes.  Once
K(S) exceeds the index bound B, the surviving least representatives <= B are
the only candidate indices left, and small ones are settled by exact
big-integer power checks.

The per-prime scan over a full period is the hot loop; it runs on numpy
int64 blocks via the addition formula u_{m+j} = u_{m+1} u_j + c u_m u_{j-1}
with a byte table of p-th-power residues, and falls back to pure Python for
tiny periods.
"""

from __future__ import annotations

import math
import os
import struct
import time
from dataclasses import dataclass, replace

import numpy as np

from .intarith import factorize, integer_root, is_prime
from .lucas import SequenceParams, successive_pair_mod, term_pair


class IrregularPrime(ValueError):
    """q divides 2c(b^2+4c); the sequence degenerates mod q."""


class UselessPrime(ValueError):
    """p does not divide q - 1, so every residue mod q is a p-th power."""


class ResidueExplosion(RuntimeError):
    """A CRT intersection would exceed the configured survivor cap."""


_DEFAULT_SCHEDULE = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31,
                     37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97)


@dataclass(frozen=True)
class SieveConfig:
    """Tuning knobs for sieve_run."""

    explosion_cap: int = 1_000_000
    soft_cap: int = 60_000
    exact_check_limit: int = 50_000
    prime_cap: int = 400
    q_limit: int = 2_000_000
    schedule_primes: tuple[int, ...] = _DEFAULT_SCHEDULE
    m_start: int = 720  # 2^4 * 3^2 * 5
    max_rounds: int = 2000
    threads: int = 0  # 0 = take LPS_THREADS from the environment (default 1)
    cache_path: str | None = None


@dataclass(frozen=True)
class SievePrime:
    """One sieving prime: period K(q) and surviving residues mod K(q)."""

    q: int
    period: int
    residues: tuple[int, ...] = ()
    rejection_ratio: float = 1.0


@dataclass(frozen=True)
class SieveState:
    """Combined modulus lcm(K(q_i)) and the CRT-consistent survivors."""

    modulus: int
    residues: tuple[int, ...]
    primes_used: tuple[SievePrime, ...] = ()


def initial_state() -> SieveState:
    return SieveState(modulus=1, residues=(0,))


# ---------------------------------------------------------------------------
# periods


def _pair_is_initial(params: SequenceParams, j: int, q: int) -> bool:
    return successive_pair_mod(params, j, q) == (0, 1)


def _order_from_divisors(params: SequenceParams, q: int, bound: int) -> int:
    """Least K | bound with (u_K, u_{K+1}) = (0, 1) mod q; requires that the
    full period divide bound."""
    k = bound
    for ell, _ in factorize(bound).pairs:
        while k % ell == 0 and _pair_is_initial(params, k // ell, q):
            k //= ell
    return k


def period_mod(params: SequenceParams, q: int) -> int:
    """Period K(q) of the state pair (u_n, u_{n+1}) mod q.

    Splits on whether the discriminant is a nonzero square mod q: if so the
    period divides q - 1 and is found through the divisor lattice; if not,
    the cycle is walked directly (bounded by q^2 - 1).
    """
    if not is_prime(q):
        raise ValueError(f"{q} is not prime")
    if (2 * params.c * params.disc) % q == 0:
        raise IrregularPrime(f"q = {q} divides 2c(b^2+4c)")
    if pow(params.disc % q, (q - 1) // 2, q) == 1:
        return _order_from_divisors(params, q, q - 1)
    b, c = params.b % q, params.c % q
    u0, u1 = 0, 1
    for j in range(1, q * q):
        u0, u1 = u1, (b * u1 + c * u0) % q
        if (u0, u1) == (0, 1):
            return j
    raise AssertionError(f"period of q = {q} not found below q^2")


def find_sieve_primes(params: SequenceParams, m_smooth: int, cap: int) -> list[SievePrime]:
    """Sieving-prime skeletons: q = d + 1 for divisors d | M, q prime and
    regular, with the discriminant a nonzero square mod q (so K(q) | q - 1).

    At most ``cap`` results, ordered by descending period.
    """
    if m_smooth < 2:
        raise ValueError("smooth modulus must be >= 2")
    divs = [1]
    for prime, e in factorize(m_smooth).pairs:
        divs = [d * prime**i for d in divs for i in range(e + 1)]
    out = []
    for d in divs:
        q = d + 1
        if q < 3 or not is_prime(q):
            continue
        if (2 * params.c * params.disc) % q == 0:
            continue
        if pow(params.disc % q, (q - 1) // 2, q) != 1:
            continue
        out.append(SievePrime(q=q, period=_order_from_divisors(params, q, d)))
    out.sort(key=lambda sp: (-sp.period, sp.q))
    return out[:cap]


# ---------------------------------------------------------------------------
# residue classes mod one prime


def _primitive_root(q: int) -> int:
    fac = [ell for ell, _ in factorize(q - 1).pairs]
    g = 2
    while True:
        if all(pow(g, (q - 1) // ell, q) != 1 for ell in fac):
            return g
        g += 1


def _pth_power_table(q: int, p: int) -> np.ndarray:
    """uint8 table over F_q marking 0 and the p-th power residues."""
    table = np.zeros(q, dtype=np.uint8)
    table[0] = 1
    h = pow(_primitive_root(q), p, q)
    count = (q - 1) // p
    block = min(count, 4096)
    small = np.empty(block, dtype=np.int64)
    cur = 1
    for i in range(block):
        small[i] = cur
        cur = cur * h % q
    stepper = int(small[-1]) * h % q  # h^block
    base = 1
    done = 0
    while done < count:
        m = min(block, count - done)
        table[(small[:m] * base) % q] = 1
        base = base * stepper % q
        done += m
    return table


_BLOCK = 1 << 15


def _period_scan(params: SequenceParams, q: int, period: int, table: np.ndarray) -> list[int]:
    """Indices r < period with table[u_r mod q] set."""
    b, c = params.b % q, params.c % q
    if period <= 2 * _BLOCK:
        u0, u1 = 0, 1
        hits = []
        for r in range(period):
            if table[u0]:
                hits.append(r)
            u0, u1 = u1, (b * u1 + c * u0) % q
        return hits
    # numpy block pass via u_{m+j} = u_{m+1} u_j + c u_m u_{j-1}
    size = _BLOCK
    u_tab = np.empty(size + 2, dtype=np.int64)
    u_tab[0], u_tab[1] = 0, 1
    x0, x1 = 0, 1
    for j in range(2, size + 2):
        x0, x1 = x1, (b * x1 + c * x0) % q
        u_tab[j] = x1
    v_tab = np.empty(size + 2, dtype=np.int64)
    v_tab[0] = pow(c, -1, q)  # u_{-1} = 1/c mod q
    v_tab[1:] = u_tab[:-1]
    hits: list[int] = []
    m0, m1 = 0, 1  # (u_offset, u_offset+1)
    offset = 0
    while offset < period:
        m = min(size, period - offset)
        vals = (m1 * u_tab[:m] % q + (c * m0 % q) * v_tab[:m]) % q
        local = np.flatnonzero(table[vals])
        if local.size:
            hits.extend((local + offset).tolist())
        nxt0 = int(m1 * u_tab[m] % q + (c * m0 % q) * v_tab[m]) % q
        nxt1 = int(m1 * u_tab[m + 1] % q + (c * m0 % q) * v_tab[m + 1]) % q
        m0, m1 = nxt0, nxt1
        offset += m
    return hits


def residue_classes(params: SequenceParams, p: int, sp: SievePrime) -> SievePrime:
    """Fill in the residue set { r < K(q) : u_r is a p-th power in F_q }."""
    q = sp.q
    if (q - 1) % p:
        raise UselessPrime(f"p = {p} does not divide q - 1 = {q - 1}")
    period = sp.period if sp.period else period_mod(params, q)
    table = _pth_power_table(q, p)
    hits = _period_scan(params, q, period, table)
    return SievePrime(q=q, period=period, residues=tuple(hits),
                      rejection_ratio=len(hits) / period)


# ---------------------------------------------------------------------------
# CRT intersection


def sieve_step(state: SieveState, sp: SievePrime,
               explosion_cap: int = 1_000_000) -> SieveState:
    """Intersect the state with one prime's residue data.

    The new modulus is lcm(modulus, K(q)); a survivor x must reduce into the
    state's residues mod modulus and into sp.residues mod K(q).  The merge
    is order-independent, so primes may be consumed in any order.
    """
    mod, k = state.modulus, sp.period
    g = math.gcd(mod, k)
    kg = k // g
    lcm = mod * kg
    new: list[int] = []
    if kg == 1:
        # k | mod: pure pruning, no lifting
        keep = frozenset(sp.residues)
        new = [r for r in state.residues if r % k in keep]
    else:
        inv = pow((mod // g) % kg, -1, kg)
        s_arr = np.fromiter(sp.residues, dtype=np.int64, count=len(sp.residues))
        s_mod = s_arr % g
        order = np.argsort(s_mod, kind="stable")
        s_sorted = s_arr[order]
        keys = s_mod[order]
        for r in state.residues:
            rg = r % g
            lo = np.searchsorted(keys, rg, side="left")
            hi = np.searchsorted(keys, rg, side="right")
            if lo == hi:
                continue
            # x = r + mod*t with t = (s - r)/g * inv (mod kg); split off the
            # big-integer part of r so the numpy arithmetic stays in int64
            ts = (((s_sorted[lo:hi] - rg) // g - (r // g) % kg) * inv) % kg
            if len(new) + (hi - lo) > explosion_cap:
                raise ResidueExplosion(
                    f"survivor set would exceed {explosion_cap} at q = {sp.q}")
            new.extend(r + mod * int(t) for t in ts)
    new.sort()
    return SieveState(modulus=lcm, residues=tuple(new),
                      primes_used=state.primes_used + (sp,))


# ---------------------------------------------------------------------------
# candidate universe and smoothness schedule


_UNIVERSE_CACHE: dict[tuple, list] = {}


def _candidate_universe(params: SequenceParams, q_limit: int,
                        schedule: tuple[int, ...]) -> list[dict]:
    """All q = d + 1 <= q_limit with d smooth over ``schedule``, q prime,
    regular, and split for the discriminant.  Period is computed lazily and
    memoized.  Cached per (b, c, q_limit, schedule)."""
    key = (params.b, params.c, q_limit, schedule)
    cached = _UNIVERSE_CACHE.get(key)
    if cached is not None:
        return cached
    found: list[dict] = []
    reg = 2 * params.c * params.disc

    def walk(idx: int, d: int, fac: dict[int, int]):
        if idx == len(schedule):
            q = d + 1
            if d >= 2 and q <= q_limit and is_prime(q) and reg % q != 0 \
                    and pow(params.disc % q, (q - 1) // 2, q) == 1:
                found.append({"d": d, "q": q, "fac": dict(fac), "period": 0})
            return
        prime = schedule[idx]
        walk(idx + 1, d, fac)
        e = 1
        dd = d * prime
        while dd <= q_limit - 1:
            fac[prime] = e
            walk(idx + 1, dd, fac)
            dd *= prime
            e += 1
        fac.pop(prime, None)

    walk(0, 1, {})
    _UNIVERSE_CACHE[key] = found
    return found


def _entry_period(params: SequenceParams, entry: dict) -> int:
    if not entry["period"]:
        entry["period"] = _order_from_divisors(params, entry["q"], entry["d"])
    return entry["period"]


# ---------------------------------------------------------------------------
# reports


@dataclass(frozen=True)
class ResolvedIndex:
    """An exactly-checked candidate index."""

    n: int
    is_power: bool
    y: int | None
    trivial: bool = False


@dataclass(frozen=True)
class SieveReport:
    """Outcome of a sieve run."""

    b: int
    c: int
    p: int
    index_bound: int
    resolved: tuple[ResolvedIndex, ...]
    unresolved: tuple[int, ...]
    final_modulus: int
    primes_consumed: int
    verdict: str  # "Complete" | "Partial"
    survivors_above_bound: int = 0
    rounds: int = 0
    wall_time: float = 0.0
    prime_stats: tuple[tuple[int, int, int], ...] = ()  # (q, period, |residues|)

    def as_json_dict(self) -> dict:
        return {
            "schema": "lucaspow/sieve-report/v1",
            "params": {"b": str(self.b), "c": str(self.c)},
            "p": self.p,
            "indexBound": str(self.index_bound),
            "verdict": self.verdict,
            "finalModulus": str(self.final_modulus),
            "primesConsumed": self.primes_consumed,
            "resolved": [
                {"n": str(r.n), "isPower": r.is_power, "trivial": r.trivial,
                 "y": None if r.y is None else str(r.y)}
                for r in self.resolved
            ],
            "unresolved": [str(r) for r in self.unresolved],
            "survivorsAboveBound": self.survivors_above_bound,
            "rounds": self.rounds,
            "wallTime": round(self.wall_time, 3),
            "primeStats": [
                {"q": q, "period": k, "residues": c}
                for q, k, c in self.prime_stats
            ],
        }


def _is_pth_power(x: int, p: int) -> tuple[bool, int | None]:
    if x == 0:
        return True, 0
    if x < 0 and p == 2:
        return False, None
    root, exact = integer_root(abs(x), p)
    if not exact:
        return False, None
    return True, root if x > 0 else -root


# ---------------------------------------------------------------------------
# the driver


def sieve_run(params: SequenceParams, p: int, bound: int,
              cfg: SieveConfig | None = None) -> SieveReport:
    """Run the sieve until the combined modulus exceeds ``bound`` and every
    surviving candidate index <= bound is settled, or the prime supply runs
    out (Partial verdict with diagnostics)."""
    if cfg is None:
        cfg = SieveConfig()
    if bound < 1:
        raise ValueError("index bound must be >= 1")
    if not is_prime(p):
        raise ValueError("exponent must be prime")
    t_start = time.monotonic()

    threads = cfg.threads or int(os.environ.get("LPS_THREADS", "1") or 1)
    schedule = tuple(cfg.schedule_primes)
    if p not in schedule:
        schedule = schedule + (p,)
    universe = _candidate_universe(params, cfg.q_limit, schedule)
    # this run only uses q = 1 (mod p)
    entries = [e for e in universe if e["d"] % p == 0]

    cache = _load_cache(cfg.cache_path, params, p) if cfg.cache_path else {}

    m_exp: dict[int, int] = dict(factorize(cfg.m_start).pairs)
    if p not in m_exp and p not in (2, 3, 5):
        m_exp[p] = 1
    maxed: set[int] = set()
    sched_pos = 0

    def available(e: dict) -> bool:
        return all(m_exp.get(prime, 0) >= exp for prime, exp in e["fac"].items())

    pool: dict[int, dict] = {}
    pending = list(entries)

    def refresh_pool():
        nonlocal pending
        still = []
        for e in pending:
            if available(e):
                pool[e["q"]] = e
            else:
                still.append(e)
        pending = still

    def next_round() -> bool:
        """Grow M by one schedule prime; False when no growth is possible."""
        nonlocal sched_pos
        for _ in range(len(schedule)):
            prime = schedule[sched_pos % len(schedule)]
            sched_pos += 1
            if prime in maxed:
                continue
            nxt = m_exp.get(prime, 0) + 1
            if prime**nxt > cfg.q_limit - 1:
                maxed.add(prime)
                continue
            m_exp[prime] = nxt
            refresh_pool()
            return True
        return False

    refresh_pool()
    state = initial_state()
    stats: list[tuple[int, int, int]] = []
    slim_used: list[SievePrime] = []
    rounds = 0
    futile = 0

    def prunable_residues() -> list[int]:
        # 0 and 1 survive everywhere; the mirror class -1 survives whenever
        # the sequence's reflection symmetry makes u_{-1} = 1/c a p-th power
        # residue, so pruning never targets it
        mod = state.modulus
        return [r for r in state.residues if 1 < r != mod - 1]

    def dirty_residues() -> list[int]:
        return [r for r in state.residues
                if 1 < r <= bound and r > cfg.exact_check_limit]

    def consume(entry: dict, track_futility: bool = False) -> bool:
        nonlocal state, futile
        pool.pop(entry["q"], None)
        key = entry["q"]
        if key in cache:
            period, residues = cache[key]
            sp = SievePrime(q=key, period=period, residues=residues,
                            rejection_ratio=len(residues) / period)
        else:
            sp = residue_classes(params, p, SievePrime(q=key, period=_entry_period(params, entry)))
            cache[key] = (sp.period, sp.residues)
        before = len(dirty_residues())
        try:
            state = sieve_step(state, sp, cfg.explosion_cap)
        except ResidueExplosion:
            pending.append(entry)  # retry once the modulus has grown
            return False
        slim_used.append(replace(sp, residues=()))
        stats.append((sp.q, sp.period, len(sp.residues)))
        if track_futility:
            futile = futile + 1 if len(dirty_residues()) >= before > 0 else 0
        return True

    def discriminating(period: int, targets: list[int]) -> bool:
        # a prime can only kill x if x is not forced into its residue set:
        # x = 0, 1 mod K always survives, and K-1 is the mirror of 1
        return any(x % period not in (0, 1, period - 1) for x in targets)

    def kill_count(q: int, period: int, targets: list[int]) -> int:
        """Exact count of targets a gain-1 prime is certain to remove:
        x dies iff u_{x mod K} is a nonzero non-p-th-power mod q.  This sees
        through structural survivors (half-period classes act like -1 times
        the trivial ones, so the residue-position heuristic cannot)."""
        kills = 0
        for x in targets:
            u = successive_pair_mod(params, x % period, q)[0]
            if u != 0 and pow(u, (q - 1) // p, q) != 1:
                kills += 1
        return kills

    def warm_cache() -> None:
        # residue scans for distinct primes are independent; precompute a few
        # likely next picks concurrently
        fresh = sorted(
            (e for e in pool.values() if e["q"] not in cache),
            key=lambda e: _entry_period(params, e),
        )[: 4 * threads]
        if len(fresh) < 2:
            return
        from concurrent.futures import ThreadPoolExecutor

        def job(entry: dict):
            sp = residue_classes(
                params, p, SievePrime(q=entry["q"], period=entry["period"]))
            return entry["q"], (sp.period, sp.residues)

        with ThreadPoolExecutor(max_workers=threads) as ex:
            for q, payload in ex.map(job, fresh):
                cache[q] = payload

    # overshoot the bound so that half-period structural classes (around
    # modulus/2) land above it rather than among the candidates
    grow_target = 2 * bound
    prune_streak = 0
    while len(stats) < cfg.prime_cap and rounds < cfg.max_rounds:
        grown = state.modulus > grow_target
        choices = []
        for q, e in pool.items():
            k = _entry_period(params, e)
            gain = k // math.gcd(state.modulus, k)
            choices.append((gain, k, q, e))

        if grown:
            dirty = dirty_residues()
            if not dirty:
                break
            if futile > 60:
                break
            targets = dirty[:32]
            killers = [c for c in choices
                       if c[0] == 1 and kill_count(c[2], c[1], targets)]
            if killers:
                best = max(killers,
                           key=lambda c: (kill_count(c[2], c[1], targets), -c[1]))
                consume(best[3], track_futility=True)
                continue
            useful = [c for c in choices if discriminating(c[1], dirty)]
            if not useful:
                rounds += 1
                if not next_round():
                    break
                continue
            consume(min(useful, key=lambda c: (c[0], c[1]))[3], track_futility=True)
            continue

        # growing phase: keep the survivor set near the structural classes by
        # pruning as soon as spurious classes appear, while partner primes for
        # the newest modulus factors are still in the pool
        stray = prunable_residues()
        if len(stray) > 8 and prune_streak < 6:
            pruners = [c for c in choices
                       if c[0] == 1 and discriminating(c[1], stray)]
            if pruners:
                consume(min(pruners, key=lambda c: c[1])[3])
                prune_streak += 1
                continue
        prune_streak = 0
        n_res = max(1, len(state.residues))
        afford = [c for c in choices
                  if c[0] > 1 and n_res * c[0] // p <= cfg.soft_cap]
        if afford:
            picked = max(afford, key=lambda c: (c[0], -c[1]))[3]
        else:
            growers = [c for c in choices if c[0] > 1]
            picked = min(growers, key=lambda c: (c[0], c[1]))[3] if growers else None
        if picked is None:
            rounds += 1
            if not next_round():
                break
            if threads > 1:
                warm_cache()
            continue
        consume(picked)

    if cfg.cache_path:
        _save_cache(cfg.cache_path, params, p, cache)

    resolved: list[ResolvedIndex] = []
    unresolved: list[int] = []
    above = 0
    for r in state.residues:
        if r > bound:
            above += 1
        elif r in (0, 1):
            resolved.append(ResolvedIndex(n=r, is_power=True, y=r, trivial=True))
        elif state.modulus > bound and r <= cfg.exact_check_limit:
            ok, y = _is_pth_power(term_pair(params, r).u, p)
            resolved.append(ResolvedIndex(n=r, is_power=ok, y=y))
        else:
            unresolved.append(r)
    verdict = "Complete" if state.modulus > bound and not unresolved else "Partial"

    return SieveReport(
        b=params.b, c=params.c, p=p, index_bound=bound,
        resolved=tuple(resolved), unresolved=tuple(unresolved),
        final_modulus=state.modulus, primes_consumed=len(stats),
        verdict=verdict, survivors_above_bound=above, rounds=rounds,
        wall_time=time.monotonic() - t_start, prime_stats=tuple(stats),
    )


# ---------------------------------------------------------------------------
# exact scanning


_AUX_PRIME: dict[int, int] = {}


def _aux_prime(p: int) -> int:
    """Smallest prime q = 1 (mod p) beyond p (for residue prefiltering)."""
    q = _AUX_PRIME.get(p)
    if q is None:
        q = 2 * p + 1
        while not is_prime(q):
            q += p if p == 2 else 2 * p
        _AUX_PRIME[p] = q
    return q


def _maybe_pth_power(x: int, p: int) -> bool:
    """Cheap one-prime filter: False means x is certainly not a p-th power."""
    q = _aux_prime(p)
    r = x % q
    return r == 0 or pow(r, (q - 1) // p, q) == 1


def scan_powers(params: SequenceParams, n_max: int) -> list[tuple[int, int, int]]:
    """All (n, y, p) with 2 <= n <= n_max, p prime, u_n = y^p, |y| >= 2.

    Indices 0 and 1 are trivially powers for every p and are left to the
    caller to flag.  Every prime exponent is reported, so a sixth power
    shows up as both a square and a cube.
    """
    from .intarith import primes_up_to

    out: list[tuple[int, int, int]] = []
    odd_primes: list[int] = []
    prime_limit = 0
    u0, u1 = 0, 1
    for n in range(2, n_max + 1):
        u0, u1 = u1, params.b * u1 + params.c * u0
        x = u1
        ax = abs(x)
        if ax < 4:
            continue
        bits = ax.bit_length()
        if bits > prime_limit:
            prime_limit = max(2 * bits, 64)
            odd_primes = [pr for pr in primes_up_to(prime_limit) if pr > 2]
        if x > 0:
            r = math.isqrt(x)
            if r * r == x and r >= 2:
                out.append((n, r, 2))
        for pr in odd_primes:
            if pr > bits:
                break
            if not _maybe_pth_power(ax, pr):
                continue
            root, exact = integer_root(ax, pr)
            if exact and root >= 2:
                out.append((n, root if x > 0 else -root, pr))
    return out


# ---------------------------------------------------------------------------
# binary residue cache ("LPSV1": little-endian, length-prefixed records)


_MAGIC = b"LPSV1"


def _save_cache(path: str, params: SequenceParams, p: int,
                cache: dict[int, tuple[int, tuple[int, ...]]]) -> None:
    with open(path, "wb") as fh:
        fh.write(_MAGIC)
        fh.write(struct.pack("<III", p, len(cache), 0))
        for q in sorted(cache):
            period, residues = cache[q]
            bitmap = bytearray((period + 7) // 8)
            for r in residues:
                bitmap[r >> 3] |= 1 << (r & 7)
            payload = struct.pack("<qqQQ", params.b, params.c, q, period) + bytes(bitmap)
            fh.write(struct.pack("<I", len(payload)))
            fh.write(payload)


def _load_cache(path: str, params: SequenceParams,
                p: int) -> dict[int, tuple[int, tuple[int, ...]]]:
    out: dict[int, tuple[int, tuple[int, ...]]] = {}
    if not path or not os.path.exists(path):
        return out
    with open(path, "rb") as fh:
        if fh.read(5) != _MAGIC:
            raise ValueError(f"{path}: not a {_MAGIC.decode()} cache file")
        file_p, count, _ = struct.unpack("<III", fh.read(12))
        if file_p != p:
            return {}
        for _ in range(count):
            (length,) = struct.unpack("<I", fh.read(4))
            payload = fh.read(length)
            b, c, q, period = struct.unpack_from("<qqQQ", payload)
            if (b, c) != (params.b, params.c):
                continue
            bitmap = payload[32:]
            residues = tuple(
                r for r in range(period) if bitmap[r >> 3] & (1 << (r & 7))
            )
            out[q] = (period, residues)
    return out
