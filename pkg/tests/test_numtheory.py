import pytest
from hypothesis import given, strategies as st

from qrdet.numtheory import (
    is_prime,
    jacobi,
    legendre_euler,
    power_sum_mod,
    primes_in,
    product_binomials,
    product_factorials,
    product_odd_factorials,
)
from math import factorial


def trial_division_factors(n):
    out, q = [], 2
    while q * q <= n:
        while n % q == 0:
            out.append(q)
            n //= q
        q += 1
    if n > 1:
        out.append(n)
    return out


def naive_is_prime(n):
    return n >= 2 and all(n % q for q in range(2, int(n**0.5) + 1))


def jacobi_oracle(a, n):
    """Product of Euler-criterion Legendre symbols over the factorisation of n."""
    out = 1
    for q in trial_division_factors(n):
        r = pow(a, (q - 1) // 2, q)
        out *= 0 if r == 0 else (1 if r == 1 else -1)
    return out


odd_moduli = st.integers(min_value=0, max_value=2000).map(lambda k: 2 * k + 1)


@pytest.mark.parametrize(
    "a, n, expected",
    [(1, 1, 1), (1, 9, 1), (1, 2001, 1), (6, 3, 0), (2, 15, 1), (3, 7, -1), (0, 1, 1), (5, 1, 1)],
)
def test_jacobi_examples(a, n, expected):
    assert jacobi(a, n) == expected


def test_jacobi_derived_examples_match_oracle():
    assert jacobi_oracle(2, 15) == 1
    assert pow(3, 3, 7) == 6  # 3 is a non-residue mod 7


@pytest.mark.parametrize("n", [0, -3, 2, 4, 100])
def test_jacobi_rejects_bad_modulus(n):
    with pytest.raises(ValueError):
        jacobi(1, n)


@given(st.integers(-10**6, 10**6), odd_moduli)
def test_jacobi_matches_factorisation_oracle(a, n):
    assert jacobi(a, n) == jacobi_oracle(a, n)


@given(st.integers(-10**4, 10**4), st.integers(-10**4, 10**4), odd_moduli)
def test_jacobi_multiplicative(a, b, n):
    assert jacobi(a * b, n) == jacobi(a, n) * jacobi(b, n)


@given(st.integers(-10**9, 10**9), odd_moduli)
def test_jacobi_periodic(a, n):
    assert jacobi(a, n) == jacobi(a % n, n)


def test_jacobi_zero_iff_common_factor():
    from math import gcd

    for n in range(1, 80, 2):
        for a in range(-n, 2 * n):
            assert (jacobi(a, n) == 0) == (gcd(a, n) > 1)


def test_jacobi_agrees_with_euler_for_primes_below_1000():
    for p in primes_in(3, 1000):
        for a in range(p):
            assert jacobi(a, p) == legendre_euler(a, p)


def test_two_over_p_sign_rule():
    for p in primes_in(3, 1000):
        assert jacobi(2, p) == (-1) ** ((p * p - 1) // 8)


def test_lemma_factorial_half_symbol():
    for p in primes_in(5, 1000):
        if p % 4 == 1:
            assert jacobi(factorial((p - 1) // 2), p) == jacobi(2, p)


@pytest.mark.parametrize("a, p, expected", [(4, 7, 1), (3, 7, -1), (0, 5, 0), (-1, 5, 1), (-1, 7, -1)])
def test_legendre_euler_examples(a, p, expected):
    assert legendre_euler(a, p) == expected


@pytest.mark.parametrize("p", [2, 9, 15, 1])
def test_legendre_euler_rejects_non_odd_prime(p):
    with pytest.raises(ValueError):
        legendre_euler(1, p)


def test_is_prime_examples():
    assert is_prime(2)
    assert not is_prime(1)
    assert not is_prime(15)


def test_is_prime_matches_trial_division():
    for n in range(1, 20000):
        assert is_prime(n) == naive_is_prime(n), n


@pytest.mark.parametrize(
    "n, expected",
    [
        (561, False),  # Carmichael
        (3215031751, False),  # strong pseudoprime to bases 2, 3, 5, 7
        (3825123056546413051, False),  # strong pseudoprime to the first nine prime bases
        (2**61 - 1, True),
        (2**64 - 59, True),  # largest prime below 2^64
        (2**64 - 1, False),
    ],
)
def test_is_prime_hard_cases(n, expected):
    assert is_prime(n) is expected


@pytest.mark.parametrize("n", [0, -7, 2**64, 2**80 + 1])
def test_is_prime_out_of_range(n):
    with pytest.raises(ValueError):
        is_prime(n)


@pytest.mark.parametrize("p, k, expected", [(5, 4, 4), (5, 3, 0), (3, 2, 2), (7, 0, 6), (2, 5, 1)])
def test_power_sum_examples(p, k, expected):
    assert power_sum_mod(p, k) == expected


def test_power_sum_examples_by_hand():
    assert (1 + 16 + 81 + 256) % 5 == 4
    assert (1 + 8 + 27 + 64) % 5 == 0


def test_power_sum_lemma_small_primes():
    for p in primes_in(2, 50, odd_only=False):
        for k in range(3 * (p - 1) + 1):
            assert power_sum_mod(p, k) == (p - 1 if k % (p - 1) == 0 else 0)


def test_power_sum_rejects_composite():
    with pytest.raises(ValueError):
        power_sum_mod(9, 2)


def test_factorial_products():
    assert factorial(0) == 1
    assert product_factorials(0) == 1
    assert product_factorials(3) == 12
    assert product_odd_factorials(3) == 1 * 6 * 120
    assert product_binomials(0) == 1
    assert product_binomials(2) == 2
    assert product_binomials(4) == 1 * 4 * 6 * 4 * 1


def test_product_binomials_identity_range():
    from math import comb, prod

    for n in range(30):
        assert product_binomials(n) == prod(comb(n, r) for r in range(n + 1))
