import pytest

from cyclorank.errors import ParameterError
from cyclorank.primes import (
    distinct_prime_factors,
    is_odd_prime,
    is_prime,
    odd_primes_in_range,
    primes_in_range,
    require_odd_prime,
)


def test_is_prime_small():
    known = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47}
    for n in range(50):
        assert is_prime(n) == (n in known)


def test_is_prime_matches_sieve_to_10000():
    sieve = set(primes_in_range(2, 10000))
    for n in range(2, 10000):
        assert is_prime(n) == (n in sieve)


def test_odd_prime_rejects_two():
    assert not is_odd_prime(2)
    assert is_odd_prime(4027)
    with pytest.raises(ParameterError):
        require_odd_prime(2)
    with pytest.raises(ParameterError):
        require_odd_prime(9)


def test_odd_primes_in_range():
    assert odd_primes_in_range(3, 20) == [3, 5, 7, 11, 13, 17, 19]
    assert odd_primes_in_range(3, 2) == []


def test_distinct_prime_factors():
    assert distinct_prime_factors(330) == [2, 3, 5, 11]
    assert distinct_prime_factors(4026) == [2, 3, 11, 61]
    assert distinct_prime_factors(97) == [97]
