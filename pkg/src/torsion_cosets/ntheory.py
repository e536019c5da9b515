"""Small integer helpers: factorization, totient, divisors, Bezout."""

from functools import lru_cache
from math import gcd, isqrt


@lru_cache(maxsize=None)
def factorize(n):
    """Prime factorization of ``n >= 1`` as a tuple of ``(p, e)`` pairs."""
    if n < 1:
        raise ValueError("n must be positive")
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def totient(n):
    r = n
    for p, _ in factorize(n):
        r = r // p * (p - 1)
    return r


@lru_cache(maxsize=None)
def divisors(n):
    divs = [1]
    for p, e in factorize(n):
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return tuple(sorted(divs))


def is_prime(n):
    if n < 2:
        return False
    return factorize(n) == ((n, 1),)


def primes_upto(n):
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, isqrt(n) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, n + 1, i)))
    return [i for i in range(n + 1) if sieve[i]]


def egcd(a, b):
    """Return ``(g, x, y)`` with ``a*x + b*y == g == gcd(a, b)``."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        return -a, -x0, -y0
    return a, x0, y0


def lcm(*args):
    r = 1
    for a in args:
        r = r * a // gcd(r, a) if a else r
    return r


def split_prime_part(L, p):
    """Write ``L = p**s * K0`` with ``gcd(K0, p) == 1``; return ``(s, p**s, K0)``."""
    s, ps = 0, 1
    while L % p == 0:
        L //= p
        s += 1
        ps *= p
    return s, ps, L
