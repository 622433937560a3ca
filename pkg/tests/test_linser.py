"""Linear-series dimension counts on the quadric."""

import random

import pytest

from stablelimit import PrimeField, QuadraticField
from stablelimit.linser import (MalformedPointError, MultiplicityAtLeast,
                                PassThrough, TangentDirection,
                                distinct_fiber_counts, series_dimension,
                                split_sections_vanishing)
from stablelimit.linalg import rank

F49 = QuadraticField(7)
F7 = PrimeField(7)

ONE = F49.one()
ZERO = F49.zero()
I = F49.i()


def pt(a, b):
    """Affine point (a, b) as projective pairs."""
    return ((a, ONE), (b, ONE))


def pt_at_infinity_both():
    return ((ONE, ZERO), (ONE, ZERO))


CORNERS = [
    ((ONE, ZERO), (ONE, ZERO)),
    ((ONE, ZERO), (ZERO, ONE)),
    ((ZERO, ONE), (ONE, ZERO)),
    ((ZERO, ONE), (ZERO, ONE)),
]


def test_unconstrained_dimensions():
    assert series_dimension((2, 2), (), F49) == 9
    assert series_dimension((1, 1), (), F49) == 4
    assert series_dimension((0, 0), (), F49) == 1


def test_four_general_points_kill_11_forms():
    conds = [PassThrough(p) for p in CORNERS]
    assert series_dimension((1, 1), conds, F49) == 0
    # brute-force oracle: the 4x4 evaluation matrix has full rank
    rows = []
    for (A, B) in CORNERS:
        a0, a1 = A
        b0, b1 = B
        rows.append([(a0 ** i) * (a1 ** (1 - i)) * (b0 ** j) * (b1 ** (1 - j))
                     for i in (0, 1) for j in (0, 1)])
    assert rank(rows, F49) == 4


def test_conditions_monotone():
    rng = random.Random(71)
    points = [pt(F49.random_element(rng), F49.random_element(rng))
              for _ in range(5)]
    conds = []
    last = series_dimension((2, 2), conds, F49)
    for p in points:
        conds.append(PassThrough(p))
        now = series_dimension((2, 2), conds, F49)
        assert now <= last
        last = now


def test_multiplicity_condition_counts():
    # a double point imposes three conditions on (2,2) forms
    assert series_dimension((2, 2),
                            [MultiplicityAtLeast(pt(I, -I), 2)], F49) == 6
    # and passing through is the m=1 case
    assert series_dimension((2, 2),
                            [MultiplicityAtLeast(pt(I, -I), 1)], F49) == 8


def test_tangent_direction_is_one_condition():
    p = pt(F49.from_int(2), F49.from_int(3))
    conds = [PassThrough(p), TangentDirection(p, (ONE, F49.from_int(5)))]
    assert series_dimension((2, 2), conds, F49) == 7


def test_swap_invariance():
    rng = random.Random(73)
    pts = [pt(F49.random_element(rng), F49.random_element(rng))
           for _ in range(3)]
    conds = [PassThrough(p) for p in pts]
    swapped = [PassThrough((B, A)) for (A, B) in pts]
    assert series_dimension((2, 3), conds, F49) == \
        series_dimension((3, 2), swapped, F49)


def test_split_sections_examples():
    assert split_sections_vanishing((), F49) == 6
    assert split_sections_vanishing((pt(ZERO, ZERO),), F49) == 4
    five = [pt(I, -I)] + CORNERS
    assert distinct_fiber_counts(five) == (3, 3)
    assert split_sections_vanishing(five, F49) == 0


def test_malformed_point_rejected():
    bad = ((ZERO, ZERO), (ONE, ONE))
    with pytest.raises(MalformedPointError):
        series_dimension((1, 1), [PassThrough(bad)], F49)
    with pytest.raises(MalformedPointError):
        split_sections_vanishing((bad,), F49)


def test_points_at_infinity_handled():
    conds = [PassThrough(pt_at_infinity_both())]
    assert series_dimension((1, 1), conds, F49) == 3
    conds.append(TangentDirection(pt_at_infinity_both(), (ONE, ONE)))
    assert series_dimension((1, 1), conds, F49) == 2
