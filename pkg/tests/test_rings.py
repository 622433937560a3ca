"""Exact-ring arithmetic: axioms, canonical forms, Hensel lifting."""

import random

import pytest

from stablelimit import (ZZ, DualNumbers, NonUnitError, NotSimpleRootError,
                         PrimeField, QuadraticField, RingMismatchError, ZMod,
                         hensel_lift)
from stablelimit.rings import eval_int_poly

F7 = PrimeField(7)
F49 = QuadraticField(7)
Z343 = ZMod(7, 3)
D49 = DualNumbers(F49)
D7 = DualNumbers(F7)

ALL_RINGS = [ZZ, F7, F49, Z343, D49, D7]


def ring_axiom_samples(ring, samples, seed=0):
    rng = random.Random(seed)
    one = ring.one()
    zero = ring.zero()
    for _ in range(samples):
        x = ring.random_element(rng)
        y = ring.random_element(rng)
        z = ring.random_element(rng)
        assert (x + y) + z == x + (y + z)
        assert x + y == y + x
        assert (x * y) * z == x * (y * z)
        assert x * y == y * x
        assert x * (y + z) == x * y + x * z
        assert x + zero == x
        assert x * one == x
        assert x + (-x) == zero
        try:
            inv = x.inverse()
        except NonUnitError:
            pass
        else:
            assert inv * x == one


@pytest.mark.parametrize("ring", ALL_RINGS, ids=repr)
def test_ring_axioms_quick(ring):
    ring_axiom_samples(ring, 2000, seed=17)


def test_defining_relations():
    i = F49.i()
    assert i * i == -F49.one()
    eps = D49.eps()
    assert (eps * eps).is_zero()
    assert eps * eps == D49.zero()


def test_canonical_residues():
    assert Z343.from_int(-1).payload == 342
    assert F49.element((9, -1)).payload == (2, 6)
    assert Z343.from_int(143) * Z343.from_int(143) == Z343.from_int(212)
    # independent oracle: plain integer long division
    assert divmod(143 * 143, 343)[1] == 212


def test_inverses():
    assert F49.one().inverse() == F49.one()
    i = F49.i()
    assert i.inverse() == -i
    assert i * (-i) == F49.one()
    with pytest.raises(NonUnitError):
        Z343.from_int(7).inverse()
    with pytest.raises(NonUnitError):
        Z343.from_int(0).inverse()
    u = Z343.from_int(143)
    assert u.inverse() * u == Z343.one()
    # dual numbers: u + v*eps invertible iff u is
    x = D49.element((F49.from_int(3), F49.i()))
    assert x.inverse() * x == D49.one()
    with pytest.raises(NonUnitError):
        D49.element((F49.zero(), F49.one())).inverse()


def test_ring_mismatch_is_typed():
    with pytest.raises(RingMismatchError):
        F7.one() + F49.one()
    with pytest.raises(RingMismatchError):
        Z343.one() * F7.one()


def test_frobenius_on_gf49():
    rng = random.Random(5)
    for _ in range(100):
        x = F49.random_element(rng)
        assert x ** 49 == x


def test_elements_hash_and_immutability():
    a = F49.element((1, 2))
    b = F49.element((8, 9))
    assert a == b and hash(a) == hash(b)
    with pytest.raises(AttributeError):
        a.payload = (0, 0)


CUBIC = (-1, 0, 1, 1)  # r^3 + r^2 - 1


def test_hensel_examples():
    assert hensel_lift(CUBIC, 7, 3, 1) == 3
    assert hensel_lift(CUBIC, 7, 3, 2) == 45
    assert hensel_lift(CUBIC, 7, 3, 3) == 143
    # brute-force oracle for the k=2 value: scan all residues mod 49
    roots = [r for r in range(49)
             if eval_int_poly(CUBIC, r) % 49 == 0 and r % 7 == 3]
    assert roots == [45]


def test_hensel_consistency_tower():
    top = hensel_lift(CUBIC, 7, 3, 6)
    for k in range(1, 7):
        assert hensel_lift(CUBIC, 7, 3, k) == top % 7 ** k
    assert eval_int_poly(CUBIC, top) % 7 ** 6 == 0


def test_hensel_random_consistency():
    rng = random.Random(11)
    found = 0
    while found < 20:
        coeffs = [rng.randrange(-20, 20) for _ in range(4)]
        if coeffs[-1] == 0:
            continue
        deriv = [i * c for i, c in enumerate(coeffs)][1:]
        for r0 in range(7):
            if (eval_int_poly(coeffs, r0) % 7 == 0
                    and eval_int_poly(deriv, r0) % 7 != 0):
                top = hensel_lift(coeffs, 7, r0, 4)
                assert eval_int_poly(coeffs, top) % 7 ** 4 == 0
                assert top % 7 == r0
                for k in (1, 2, 3):
                    assert hensel_lift(coeffs, 7, r0, k) == top % 7 ** k
                found += 1
                break


def test_hensel_rejects_non_simple_roots():
    with pytest.raises(NotSimpleRootError):
        hensel_lift((0, 0, 1), 7, 0, 3)   # r^2: double root at 0
    with pytest.raises(NotSimpleRootError):
        hensel_lift(CUBIC, 7, 1, 2)       # 1 is not a root mod 7


def test_quadratic_field_requires_nonsquare():
    with pytest.raises(ValueError):
        QuadraticField(5)   # -1 is a square mod 5
    with pytest.raises(ValueError):
        QuadraticField(8)


def test_dual_numbers_do_not_nest():
    with pytest.raises(ValueError):
        DualNumbers(D49)
