import random

import pytest

from oracles import monomial_quotient_length, staircase_count

from jstretch.errors import NotLocallyContained
from jstretch.groebner import buchberger
from jstretch.ideals import AmbientRing
from jstretch.lengths import (
    INFINITE,
    count_standard_below,
    hilbert_function,
    is_m_primary,
    quotient_length,
)
from jstretch.poly import PolyRing


@pytest.fixture
def kxy():
    return AmbientRing(PolyRing(("x", "y")))


def test_zero_quotient(kxy):
    x, y = kxy.ring.variables()
    A = kxy.ideal(x**2, y)
    assert quotient_length(A, A).value == 0


def test_plane_quotient_lengths(kxy):
    x, y = kxy.ring.variables()
    got = quotient_length(kxy.ideal(x, y) ** 2, kxy.ideal(y**2, x * y, x**4))
    assert got.value == 2
    assert quotient_length(kxy.unit_ideal(), kxy.ideal(x, y) ** 2).value == 3
    assert quotient_length(kxy.unit_ideal(), kxy.ideal(x, y) ** 3).value == 6


def test_precondition(kxy):
    x, y = kxy.ring.variables()
    with pytest.raises(NotLocallyContained):
        quotient_length(kxy.ideal(x), kxy.ideal(y))


def test_infinite_is_a_result(kxy):
    x, y = kxy.ring.variables()
    got = quotient_length(kxy.unit_ideal(), kxy.ideal(x))
    assert got.value == INFINITE
    assert not got.is_finite
    with pytest.raises(ValueError):
        int(got)


def test_zero_length_iff_local_containment(kxy):
    x, y = kxy.ring.variables()
    A = kxy.ideal(x**2, x * y)
    B = kxy.ideal(x)
    # A/B zero iff A inside B locally
    assert B.contains_locally(A)
    assert quotient_length(B, A).value == (0 if A.contains_locally(B) else 1)


def test_additivity_on_chain():
    ring = PolyRing(("x", "y", "z"))
    amb = AmbientRing(ring, (ring.parse("x^4"), ring.parse("x*z"), ring.parse("y*z")))
    x, y, z = ring.variables()
    I = amb.ideal(x, y)
    J = amb.ideal(y)
    JI = J * I
    mid = J.intersect(I**2)
    top = I**2
    a = quotient_length(top, mid, check=False)
    b = quotient_length(mid, JI, check=False)
    c = quotient_length(top, JI, check=False)
    assert a.is_finite and b.is_finite and c.is_finite
    assert c.value == a.value + b.value


def test_staircase_counter_against_enumeration():
    rng = random.Random(29)
    for _ in range(60):
        nvars = rng.randint(1, 4)
        gens = [tuple(rng.randint(0, 5) for _ in range(nvars)) for _ in range(rng.randint(0, 5))]
        bound = rng.randint(1, 8)
        assert count_standard_below(gens, bound, nvars) == staircase_count(gens, bound, nvars)


def test_quotient_length_against_monomial_oracle():
    ring = PolyRing(("x", "y", "z"))
    amb = AmbientRing(ring)
    rng = random.Random(30)
    for _ in range(20):
        gens = []
        for _ in range(rng.randint(1, 3)):
            exps = tuple(rng.randint(0, 3) for _ in range(3))
            gens.append(ring.from_exp_terms([(exps, 1)]))
        A = amb.ideal(gens)
        k = rng.randint(1, 2)
        B = A * (amb.maximal_ideal**k)
        expected = monomial_quotient_length(
            [ring.decode(g.lm) for g in A.generators],
            [ring.decode(g.lm) for g in B.generators],
            3,
        )
        assert quotient_length(A, B).value == expected


def test_hilbert_function_examples():
    ring = PolyRing(("x", "y"))
    amb = AmbientRing(ring, (ring.parse("x^4"),))
    Ibar = amb.ideal(*ring.variables())
    assert hilbert_function(Ibar, 0) == 1
    assert hilbert_function(Ibar, 1) == 2
    assert hilbert_function(amb.unit_ideal(), 3) == 0


def test_is_m_primary():
    ring = PolyRing(("x", "y"))
    amb = AmbientRing(ring)
    x, y = ring.variables()
    assert is_m_primary(amb.ideal(x, y))
    assert is_m_primary(amb.ideal(x**2, y**3))
    assert not is_m_primary(amb.ideal(x))
