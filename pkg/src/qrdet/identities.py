"""Matrix builders for the four determinant families and their closed-form evaluators."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import factorial, gcd, prod

from .exactla import IntMatrix
from .numtheory import (
    is_prime,
    jacobi,
    product_binomials,
    product_factorials,
    product_odd_factorials,
)
from .symmetric import s_sum, t_sum, vandermonde_product, weighted_sigma_sum

__all__ = [
    "Family",
    "FamilyParams",
    "ExactRatio",
    "build_family",
    "power_sum_matrix",
    "polynomial_matrix",
    "thm31_rhs",
    "eqP_rhs",
    "a_closed",
    "b_closed",
    "normalize_a",
    "normalize_b",
    "sc_prediction",
    "sc_formula",
    "small_a",
    "small_b_normalized",
]


class Family(str, enum.Enum):
    THM11 = "THM11"  # (i^2 + d j^2) * jacobi(i^2 + d j^2, n), 0 <= i, j <= (n-1)/2
    A_N = "A_N"  # (i + d j + c)^n, 0 <= i, j <= n-1
    B_N = "B_N"  # (i^2 + d j^2)^n, 0 <= i, j <= n-1
    SC = "SC"  # jacobi(i^2 + d j^2 + c, p), 1 <= i, j <= (p-1)/2


@dataclass(frozen=True)
class FamilyParams:
    family: Family
    n_or_p: int
    d: int
    c: int = 0

    def __post_init__(self):
        fam = Family(self.family)
        object.__setattr__(self, "family", fam)
        m = self.n_or_p
        if fam is Family.THM11:
            if m < 3 or m % 2 == 0:
                raise ValueError(f"THM11 needs odd n >= 3, got {m}")
        elif fam in (Family.A_N, Family.B_N):
            if m < 1:
                raise ValueError(f"{fam.value} needs n >= 1, got {m}")
        else:
            if m < 3 or not is_prime(m):
                raise ValueError(f"SC needs an odd prime p, got {m}")
            if (self.c * self.d) % m == 0:
                raise ValueError(f"SC needs p not dividing c*d, got p={m}, c={self.c}, d={self.d}")


def build_family(params: FamilyParams) -> IntMatrix:
    fam, m, c, d = params.family, params.n_or_p, params.c, params.d
    if fam is Family.THM11:
        idx = range((m - 1) // 2 + 1)
        rows = [[(i * i + d * j * j) * jacobi(i * i + d * j * j, m) for j in idx] for i in idx]
        return IntMatrix.from_rows(rows, 0)
    if fam is Family.A_N:
        return power_sum_matrix(range(m), [d * j + c for j in range(m)], m)
    if fam is Family.B_N:
        sq = [i * i for i in range(m)]
        return power_sum_matrix(sq, [d * v for v in sq], m)
    idx = range(1, (m - 1) // 2 + 1)
    rows = [[jacobi(i * i + d * j * j + c, m) for j in idx] for i in idx]
    return IntMatrix.from_rows(rows, 1)


def power_sum_matrix(x, y, n: int | None = None) -> IntMatrix:
    """The matrix [(x_i + y_j)^n]; n defaults to the length."""
    if len(x) != len(y):
        raise ValueError(f"length mismatch: {len(x)} vs {len(y)}")
    if n is None:
        n = len(x)
    return IntMatrix.from_rows([[(xi + yj) ** n for yj in y] for xi in x])


def polynomial_matrix(coeffs, x, y) -> IntMatrix:
    """The matrix [P(x_i + y_j)] with P(z) = sum coeffs[k] z^k."""
    if len(x) != len(y):
        raise ValueError(f"length mismatch: {len(x)} vs {len(y)}")

    def P(z):
        acc = 0
        for a in reversed(coeffs):
            acc = acc * z + a
        return acc

    return IntMatrix.from_rows([[P(xi + yj) for yj in y] for xi in x])


def _sign(e: int) -> int:
    return -1 if e & 1 else 1


def thm31_rhs(x, y) -> int:
    """Closed form for det[(x_i + y_j)^n] through Vandermonde products and sigma sums."""
    if len(x) != len(y):
        raise ValueError(f"length mismatch: {len(x)} vs {len(y)}")
    n = len(x)
    if n < 1:
        raise ValueError("need at least one point")
    return (
        _sign(n * (n - 1) // 2)
        * vandermonde_product(x)
        * vandermonde_product(y)
        * weighted_sigma_sum(x, y, n)
    )


def eqP_rhs(a_top: int, x, y) -> int:
    """a_top^n * prod_k C(n-1, k) * prod_{i<j} (x_i - x_j)(y_j - y_i).

    Equals det[P(x_i + y_j)] for any P of degree <= n-1 whose z^(n-1)
    coefficient is ``a_top``.
    """
    if len(x) != len(y):
        raise ValueError(f"length mismatch: {len(x)} vs {len(y)}")
    n = len(x)
    if n < 1:
        raise ValueError("need at least one point")
    # prod_{i<j}(x_i - x_j) flips the sign of each of the n(n-1)/2 factors.
    vx = _sign(n * (n - 1) // 2) * vandermonde_product(x)
    return a_top**n * product_binomials(n - 1) * vx * vandermonde_product(y)


def a_closed(n: int, c: int, d: int) -> int:
    N = n * (n - 1) // 2
    return (-d) ** N * s_sum(n, c, d) * product_factorials(n - 1) ** 2


def b_closed(n: int, d: int) -> int:
    N = n * (n - 1) // 2
    return (-d) ** N * t_sum(n, d) * factorial(n - 1) ** 2 * product_odd_factorials(n - 1) ** 2


@dataclass(frozen=True)
class ExactRatio:
    """A reduced rational that remembers the factors of its original denominator."""

    numerator: int
    denominator: int
    factors: tuple[tuple[str, int], ...] = ()

    @classmethod
    def from_parts(cls, numerator: int, factors) -> ExactRatio:
        factors = tuple(factors)
        den = prod(v for _, v in factors)
        if den == 0:
            raise ZeroDivisionError("zero denominator factor")
        if den < 0:
            numerator, den = -numerator, -den
        g = gcd(numerator, den)
        return cls(numerator // g, den // g, factors)

    @property
    def is_integer(self) -> bool:
        return self.denominator == 1

    @property
    def value(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)

    def non_dividing_factors(self) -> list[str]:
        """Labels of denominator factors that do not divide the original numerator."""
        original = self.numerator * prod(v for _, v in self.factors) // self.denominator
        return [label for label, v in self.factors if original % v]


def normalize_a(n: int, c: int, d: int) -> ExactRatio:
    if d == 0:
        raise ValueError("d must be nonzero")
    if n < 2:
        raise ValueError("n must be at least 2")
    N = n * (n - 1) // 2
    return ExactRatio.from_parts(
        a_closed(n, c, d),
        [
            ("d^(n(n-1)/2)", d**N),
            ("(n-2)!", factorial(n - 2)),
            ("n", n),
            ("prod k!", product_factorials(n)),
        ],
    )


def normalize_b(n: int, d: int) -> ExactRatio:
    if d == 0:
        raise ValueError("d must be nonzero")
    if n < 2:
        raise ValueError("n must be at least 2")
    N = n * (n - 1) // 2
    return ExactRatio.from_parts(
        b_closed(n, d),
        [
            ("d^(n(n-1)/2)", d**N),
            ("2", 2),
            ("prod k!", product_factorials(n)),
            ("prod (2k-1)!", product_odd_factorials(n)),
        ],
    )


def _check_sc(p, c, d):
    if p < 3 or not is_prime(p):
        raise ValueError(f"p must be an odd prime, got {p}")
    if (c * d) % p == 0:
        raise ValueError(f"p={p} divides c*d={c * d}")


def sc_prediction(p: int, c: int, d: int) -> int:
    """Legendre symbol of S_c(d, p) read off the four-case table."""
    _check_sc(p, c, d)
    cs, mcs, ds = jacobi(c, p), jacobi(-c, p), jacobi(d, p)
    if cs == 1 and ds == -1:
        return 1
    if cs == -1 and ds == -1:
        return jacobi(-1, p)
    if mcs == 1 and ds == 1:
        return jacobi(-2, p)
    if mcs == -1 and ds == 1:
        return jacobi(-6, p)
    raise AssertionError("unreachable: the four cases cover p not dividing cd")


def sc_formula(p: int, c: int, d: int) -> int:
    """Legendre symbol of S_c(d, p) from the single closed expression.

    (-1)^N (d/p)^N ((c/p) - (-1)^n (1 + (d/p)) / p), n = (p-1)/2, N = n(n-1)/2.
    """
    _check_sc(p, c, d)
    n = (p - 1) // 2
    N = n * (n - 1) // 2
    ds = jacobi(d, p)
    inner = jacobi(c, p) - _sign(n) * (1 + ds)
    return _sign(N) * ds**N * jacobi(inner, p)


def small_a(n: int, c: int, d: int) -> int:
    """Hand-expanded a_n polynomials for n = 2..4."""
    if n == 2:
        return -d * (d + 2 * c * (1 + c + d))
    if n == 3:
        return -36 * d**3 * (1 + c + d) * (c * (2 + c) + 2 * (1 + c) * d)
    if n == 4:
        return 2304 * d**6 * (
            6 * c * (1 + c) * (2 + c) * (3 + c)
            + 18 * (3 + 2 * c) * (1 + c * (3 + c)) * d
            + 11 * (11 + 6 * c * (3 + c)) * d**2
            + 18 * (3 + 2 * c) * d**3
        )
    raise ValueError(f"no tabulated a_n for n={n}")


def small_b_normalized(n: int, d: int) -> Fraction:
    """Hand-expanded normalized b'_n polynomials for n = 1..5."""
    if n == 1:
        return Fraction(0)
    if n == 2:
        return Fraction(-d, 24)
    if n == 3:
        return Fraction(-d * (d + 1), 2)
    if n == 4:
        return Fraction(108 * d + 343 * d**2 + 108 * d**3)
    if n == 5:
        return Fraction(720000 * d + 4663750 * d**2 + 4663750 * d**3 + 720000 * d**4)
    raise ValueError(f"no tabulated b'_n for n={n}")
