"""Prime generation and Chinese-remainder recombination for modular kernels.

Primes are drawn from a fixed descending sequence starting just below 2**25,
so every computation sees the same moduli regardless of scheduling. The
25-bit ceiling keeps all intermediate products of the numpy elimination
kernels inside int64 (p**2 < 2**50, row dots < n * 2**50).
"""

from __future__ import annotations

import threading

PRIME_CEILING = 1 << 25

# Deterministic witness set: Miller-Rabin with these bases is exact for all
# n < 3.3e24, far beyond any modulus used here.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_probable_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
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


_pool: list[int] = []
_pool_lock = threading.Lock()


def nth_prime_below_ceiling(i: int) -> int:
    """The i-th prime (0-based) of the descending sequence below 2**25."""
    with _pool_lock:
        candidate = (_pool[-1] if _pool else PRIME_CEILING) - 1
        while len(_pool) <= i:
            while not is_probable_prime(candidate):
                candidate -= 1
            _pool.append(candidate)
            candidate -= 1
        return _pool[i]


def primes_for_bound(bound: int) -> list[int]:
    """Smallest prefix of the prime sequence whose product exceeds ``bound``."""
    out: list[int] = []
    prod = 1
    i = 0
    while prod <= bound:
        p = nth_prime_below_ceiling(i)
        out.append(p)
        prod *= p
        i += 1
    return out


def crt_combine(residues: list[int], moduli: list[int]) -> int:
    """Solve x = residues[i] (mod moduli[i]) for pairwise coprime moduli.

    Returns the canonical representative in [0, prod(moduli)).
    """
    x = 0
    m = 1
    for r, p in zip(residues, moduli):
        # lift x from modulus m to modulus m*p
        t = (r - x) * pow(m % p, -1, p) % p
        x += m * t
        m *= p
    return x


def symmetric_lift(x: int, modulus: int) -> int:
    """Representative of x mod ``modulus`` in (-modulus/2, modulus/2]."""
    x %= modulus
    return x - modulus if x > modulus // 2 else x
