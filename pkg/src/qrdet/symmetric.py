"""Elementary symmetric polynomials, Vandermonde products and the weighted sigma sums."""

from math import comb

from .numtheory import product_binomials

__all__ = [
    "elem_sym_all",
    "elem_sym_mod",
    "vandermonde_product",
    "weighted_sigma_sum",
    "s_sum",
    "t_sum",
]


def elem_sym_all(x) -> list[int]:
    """Return [sigma_0, ..., sigma_n] of the values in ``x``.

    Built by multiplying out prod(t + x_i) one factor at a time, so
    ``sigma_k`` is the coefficient of t^(n-k). The empty list gives [1].
    """
    sig = [1]
    for v in x:
        sig = [a + v * b for a, b in zip(sig + [0], [0] + sig)]
    return sig


def elem_sym_mod(x, m: int) -> list[int]:
    """``elem_sym_all`` with every intermediate reduced mod m."""
    if m < 1:
        raise ValueError("modulus must be positive")
    sig = [1 % m]
    for v in x:
        v %= m
        sig = [(a + v * b) % m for a, b in zip(sig + [0], [0] + sig)]
    return sig


def vandermonde_product(x) -> int:
    """prod_{i<j} (x_j - x_i); 1 for fewer than two values."""
    out = 1
    for j in range(1, len(x)):
        xj = x[j]
        for i in range(j):
            out *= xj - x[i]
    return out


def weighted_sigma_sum(x, y, n: int | None = None) -> int:
    """Sum over k of (prod_{r != k} C(n, r)) * sigma_k(x) * sigma_{n-k}(y)."""
    if len(x) != len(y):
        raise ValueError(f"length mismatch: {len(x)} vs {len(y)}")
    if n is None:
        n = len(x)
    if n != len(x) or n < 1:
        raise ValueError(f"n must equal the common length >= 1, got n={n}")
    sx = elem_sym_all(x)
    sy = elem_sym_all(y)
    full = product_binomials(n)
    total = 0
    for k in range(n + 1):
        w, r = divmod(full, comb(n, k))
        if r:
            raise ArithmeticError(f"C({n},{k}) does not divide the binomial product")
        total += w * sx[k] * sy[n - k]
    return total


def s_sum(n: int, c: int, d: int) -> int:
    """Weighted sigma sum for x = (0..n-1), y = (d*j + c for j in 0..n-1)."""
    return weighted_sigma_sum(list(range(n)), [d * j + c for j in range(n)], n)


def t_sum(n: int, d: int) -> int:
    """Weighted sigma sum for x = (j^2), y = (d*j^2), j = 0..n-1."""
    sq = [j * j for j in range(n)]
    return weighted_sigma_sum(sq, [d * v for v in sq], n)
