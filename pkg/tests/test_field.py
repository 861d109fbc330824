import random

import pytest

from jstretch.field import PrimeField, is_prime


def test_default_characteristic():
    assert PrimeField().p == 32003
    assert is_prime(32003)


def test_non_prime_rejected():
    with pytest.raises(ValueError):
        PrimeField(10)
    with pytest.raises(ValueError):
        PrimeField(1)


def test_field_axioms_on_random_triples():
    F = PrimeField(101)
    rng = random.Random(5)
    for _ in range(200):
        a, b, c = (rng.randrange(101) for _ in range(3))
        assert F.add(a, b) == F.add(b, a)
        assert F.mul(a, b) == F.mul(b, a)
        assert F.add(F.add(a, b), c) == F.add(a, F.add(b, c))
        assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
        assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))


def test_inverse():
    F = PrimeField()
    rng = random.Random(6)
    for _ in range(50):
        a = rng.randrange(1, F.p)
        assert F.mul(a, F.inv(a)) == 1
    with pytest.raises(ZeroDivisionError):
        F.inv(0)
