"""Scalar number theory: Jacobi/Legendre symbols, primality, power sums, factorial products."""

from math import comb, factorial, prod

__all__ = [
    "jacobi",
    "legendre_euler",
    "is_prime",
    "power_sum_mod",
    "factorial",
    "product_factorials",
    "product_odd_factorials",
    "product_binomials",
    "primes_in",
]

_MR_LIMIT = 1 << 64
# Deterministic for every n < 2**64.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def jacobi(a: int, n: int) -> int:
    """Jacobi symbol (a/n) for odd n >= 1 and any integer a.

    Returns 0 exactly when gcd(a, n) > 1, and 1 when n == 1.
    """
    if n < 1 or not n & 1:
        raise ValueError(f"Jacobi symbol needs an odd positive modulus, got {n}")
    result = 1
    if a < 0:
        a = -a
        # (-1/n) = (-1)^((n-1)/2)
        if n & 3 == 3:
            result = -result
    a %= n
    while a:
        while not a & 1:
            a >>= 1
            # (2/n) = (-1)^((n^2-1)/8)
            if n & 7 in (3, 5):
                result = -result
        a, n = n, a
        if a & 3 == 3 and n & 3 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def legendre_euler(a: int, p: int) -> int:
    """Legendre symbol by Euler's criterion, a^((p-1)/2) mod p."""
    if p < 3 or not is_prime(p):
        raise ValueError(f"Euler's criterion needs an odd prime, got {p}")
    r = pow(a, (p - 1) // 2, p)
    if r == 0:
        return 0
    if r == 1:
        return 1
    if r == p - 1:
        return -1
    raise ArithmeticError(f"a^((p-1)/2) mod p = {r} is not 0 or +-1")


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for 1 <= n < 2**64."""
    if n < 1 or n >= _MR_LIMIT:
        raise ValueError(f"is_prime supports 1 <= n < 2**64, got {n}")
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while not d & 1:
        d >>= 1
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primes_in(lo: int, hi: int, odd_only: bool = True) -> list[int]:
    """Primes in the closed interval [lo, hi]."""
    start = max(lo, 3 if odd_only else 2)
    return [q for q in range(start, hi + 1) if is_prime(q)]


def power_sum_mod(p: int, k: int) -> int:
    """Sum of i**k for i = 1..p-1, reduced mod p (computed directly)."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if p < 2 or not is_prime(p):
        raise ValueError(f"power_sum_mod needs a prime modulus, got {p}")
    return sum(pow(i, k, p) for i in range(1, p)) % p


def product_factorials(n: int) -> int:
    """1! * 2! * ... * n! (empty product 1 for n = 0)."""
    out, f = 1, 1
    for k in range(1, n + 1):
        f *= k
        out *= f
    return out


def product_odd_factorials(n: int) -> int:
    """1! * 3! * ... * (2n-1)!"""
    return prod(factorial(2 * k - 1) for k in range(1, n + 1))


def product_binomials(n: int) -> int:
    """C(n,0) * C(n,1) * ... * C(n,n).

    Cross-checked against (n!)^(n+1) / (0! 1! ... n!)^2.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    value = prod(comb(n, r) for r in range(n + 1))
    num = factorial(n) ** (n + 1)
    den = product_factorials(n) ** 2
    if num % den or num // den != value:
        raise ArithmeticError(f"binomial product identity broken at n={n}")
    return value
