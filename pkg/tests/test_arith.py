import math

import pytest

from chardeg import arith
from chardeg.errors import NotCoprime


def trial_division_is_prime(n):
    if n < 2:
        return False
    return all(n % d for d in range(2, math.isqrt(n) + 1))


def test_is_prime_small_range_against_trial_division():
    for n in range(0, 2000):
        assert arith.is_prime(n) == trial_division_is_prime(n), n


def test_is_prime_spot_values():
    assert arith.is_prime(2)
    assert not arith.is_prime(1)
    assert arith.is_prime(191)
    assert arith.is_prime(10831)
    assert arith.is_prime(29033)
    # strong pseudoprime to several small bases
    assert not arith.is_prime(3215031751)
    assert arith.is_prime(2**61 - 1)


def test_factor_examples():
    assert arith.factor(1).factors == ()
    assert arith.factor(12).factors == ((2, 2), (3, 1))
    assert arith.factor(3420).factors == ((2, 2), (3, 2), (5, 1), (19, 1))
    assert arith.factor(2476099).factors == ((19, 5),)


def test_factor_roundtrip_range():
    for n in range(1, 3000):
        f = arith.factor(n)
        assert f.value == n
        assert all(arith.is_prime(p) for p, _ in f.factors)
        assert list(f.factors) == sorted(f.factors)


def test_factor_large_semiprime():
    n = 1000003 * 1000033
    assert arith.factor(n).factors == ((1000003, 1), (1000033, 1))


def test_multiplicative_order():
    assert arith.multiplicative_order(1, 5) == 1
    assert arith.multiplicative_order(2, 7) == 3
    assert arith.multiplicative_order(3, 7) == 6
    assert arith.multiplicative_order(4, 11) == 5
    with pytest.raises(NotCoprime):
        arith.multiplicative_order(2, 4)


def test_multiplicative_order_is_minimal():
    for n in (5, 7, 9, 12, 55, 191):
        for a in range(1, n):
            if math.gcd(a, n) != 1:
                continue
            k = arith.multiplicative_order(a, n)
            assert pow(a, k, n) == 1
            assert all(pow(a, j, n) != 1 for j in range(1, k))


def test_least_prime_power_1mod_examples():
    cases = {
        2: (3, 1),
        3: (2, 2),
        4: (5, 1),
        5: (11, 1),
        7: (2, 3),
        8: (3, 2),
        9: (19, 1),
        19: (191, 1),
        25: (101, 1),
        49: (197, 1),
        121: (3, 5),
        169: (677, 1),
        361: (10831, 1),
    }
    for n, (q, m) in cases.items():
        pp = arith.least_prime_power_1mod(n)
        assert (pp.q, pp.m) == (q, m), n


def test_least_prime_power_1mod_is_minimal():
    # independent oracle: merged sorted stream of prime powers
    bound = 30_000
    stream = sorted(
        q**m
        for q in arith.primes_up_to(bound)
        for m in range(1, bound.bit_length())
        if q**m <= bound
    )
    for n in range(2, 250):
        expect = next(v for v in stream if v % n == 1)
        got = arith.least_prime_power_1mod(n)
        assert got.value == expect, n
        assert got.value % n == 1
        assert got.q ** got.m == got.value


def test_least_prime_1mod():
    assert arith.least_prime_1mod(2) == 3
    assert arith.least_prime_1mod(3) == 7
    assert arith.least_prime_1mod(5) == 11
    assert arith.least_prime_1mod(19) == 191


def test_kanold_holds():
    for p in (2, 3, 5, 7, 19, 191):
        assert arith.kanold_holds(p)


def test_psl2_order():
    assert arith.psl2_order(2) == 6
    assert arith.psl2_order(3) == 12
    assert arith.psl2_order(5) == 60
    assert arith.psl2_order(7) == 168
    assert arith.psl2_order(19) == 3420
    with pytest.raises(ValueError):
        arith.psl2_order(9)


def test_is_cyclic_number():
    assert arith.is_cyclic_number(1)
    assert arith.is_cyclic_number(15)
    assert arith.is_cyclic_number(35)
    assert not arith.is_cyclic_number(30)
    # primes are cyclic numbers; prime squares are not
    for p in (2, 3, 5, 7, 11):
        assert arith.is_cyclic_number(p)
        assert not arith.is_cyclic_number(p * p)


def test_euler_phi():
    assert arith.euler_phi(1) == 1
    assert arith.euler_phi(12) == 4
    assert arith.euler_phi(99) == 60
    for n in range(1, 200):
        assert arith.euler_phi(n) == sum(
            1 for k in range(1, n + 1) if math.gcd(k, n) == 1
        )


def test_primes_up_to():
    assert arith.primes_up_to(1) == []
    assert arith.primes_up_to(20) == [2, 3, 5, 7, 11, 13, 17, 19]
    assert len(arith.primes_up_to(4000)) == 550
