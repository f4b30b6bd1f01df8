"""Exact integer number theory: symbols, primitive roots, indices, (a,b)-Fibonacci.

Everything here works on Python ints and is sized for desk-scale moduli
(a few thousand at most); nothing is tuned for cryptographic sizes.
"""

from functools import lru_cache
import math

from .errors import CordialError


def gcd(x, y):
    """Greatest common divisor of |x| and |y|, with gcd(0, 0) == 0."""
    return math.gcd(x, y)


@lru_cache(maxsize=None)
def factorize(n):
    """Prime factorization of ``n >= 1`` as a tuple of (prime, exponent)."""
    if n < 1:
        raise CordialError(f"cannot factor {n}")
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def is_prime(n):
    return n >= 2 and factorize(n) == ((n, 1),)


def is_odd_prime(n):
    return n > 2 and is_prime(n)


def is_perfect_square(n):
    return n >= 0 and math.isqrt(n) ** 2 == n


def euler_phi(n):
    if n < 1:
        raise CordialError(f"euler_phi needs n >= 1, got {n}")
    result = n
    for p, _ in factorize(n):
        result = result // p * (p - 1)
    return result


def coprime_residues(n):
    """Residues in [1, n-1] coprime to ``n`` (empty for n == 1)."""
    return [r for r in range(1, n) if math.gcd(r, n) == 1]


def legendre_symbol(a, p):
    """Legendre symbol (a/p) by Euler's criterion."""
    if not is_odd_prime(p):
        raise CordialError(f"Legendre symbol needs an odd prime, got {p}")
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


def jacobi_symbol(a, n):
    """Jacobi symbol (a/n): product of Legendre symbols over the factorization of n."""
    if n < 1 or n % 2 == 0:
        raise CordialError(f"Jacobi symbol needs an odd positive modulus, got {n}")
    result = 1
    for p, e in factorize(n):
        s = legendre_symbol(a, p)
        if s == 0:
            return 0
        if e % 2:
            result *= s
    return result


def multiplicative_order(a, n):
    if math.gcd(a, n) != 1:
        raise CordialError(f"{a} is not a unit modulo {n}")
    phi = euler_phi(n)
    order = phi
    for p, _ in factorize(phi):
        while order % p == 0 and pow(a, order // p, n) == 1:
            order //= p
    return order


def has_primitive_root(n):
    if n in (2, 4):
        return True
    if n < 2:
        return False
    m = n // 2 if n % 2 == 0 else n
    if m % 2 == 0:
        return False
    return len(factorize(m)) == 1


@lru_cache(maxsize=None)
def primitive_root(n):
    """Smallest positive primitive root of ``n``, or None when the unit group is not cyclic."""
    if n < 2:
        raise CordialError(f"primitive_root needs n >= 2, got {n}")
    if not has_primitive_root(n):
        return None
    if n == 2:
        return 1
    phi = euler_phi(n)
    for g in range(2, n):
        if math.gcd(g, n) == 1 and multiplicative_order(g, n) == phi:
            return g
    raise AssertionError(f"no primitive root found for {n}")  # pragma: no cover


def is_primitive_root(g, n):
    return math.gcd(g, n) == 1 and multiplicative_order(g % n, n) == euler_phi(n)


@lru_cache(maxsize=None)
def _index_table(base, n):
    table = {}
    x = 1 % n
    for k in range(euler_phi(n)):
        table.setdefault(x, k)
        x = x * base % n
    return table


def discrete_log(a, base, n):
    """The unique k in [0, phi(n)-1] with base**k == a (mod n).

    Linear scan over the powers of ``base``; the table is cached per (base, n).
    """
    if math.gcd(a, n) != 1:
        raise CordialError(f"{a} is not coprime to {n}")
    if not is_primitive_root(base, n):
        raise CordialError(f"{base} is not a primitive root of {n}")
    return _index_table(base % n, n)[a % n]


def fib_ab(i, a=1, b=1, eta=None):
    """The i-th (a,b)-Fibonacci number, optionally reduced modulo ``eta``.

    Seeds F_0 = 0, F_1 = 1 and F_i = a*F_{i-1} + b*F_{i-2}.  With ``eta`` the
    value comes back in [0, eta-1]; without it the exact integer is returned.
    """
    if i < 0:
        raise CordialError(f"Fibonacci index must be nonnegative, got {i}")
    prev, cur = 0, 1
    if eta is None:
        for _ in range(i):
            prev, cur = cur, a * cur + b * prev
        return prev
    if eta < 1:
        raise CordialError(f"modulus must be positive, got {eta}")
    prev, cur = 0, 1 % eta
    for _ in range(i):
        prev, cur = cur, (a * cur + b * prev) % eta
    return prev
