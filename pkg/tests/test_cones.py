import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from blowup.cones import (
    ExactDistanceSq,
    RationalCone2D,
    brute_force_minimal_multiple,
    brute_force_verify,
    contains,
    effective_multiple_bound,
    hyperplane_distance_sq,
    interior_contains,
    lattice_distance_constant_sq,
)
from blowup.errors import DegenerateInputError, InvalidAnchorError

Q1 = RationalCone2D((1, 0), (0, 1))


def test_distance_examples():
    assert hyperplane_distance_sq((0, 0), (3, 5)).as_fraction() == 0
    assert hyperplane_distance_sq((1, 0), (0, 1)).as_fraction() == 0
    d = hyperplane_distance_sq((1, 1), (1, -2))
    assert (d.numerator, d.denominator) == (1, 5)
    with pytest.raises(DegenerateInputError):
        hyperplane_distance_sq((1, 1), (0, 0))


def test_distance_constant_examples():
    assert lattice_distance_constant_sq(Q1).as_fraction() == 1
    assert Q1.normals == ((0, 1), (1, 0))
    c = RationalCone2D((1, 0), (1, 2))
    assert c.u2 == (2, -1)
    assert lattice_distance_constant_sq(c).as_fraction() == Fraction(1, 5)
    assert lattice_distance_constant_sq(RationalCone2D((2, 1), (1, 2))).as_fraction() == Fraction(1, 5)


def test_generators_normalised_and_checked():
    c = RationalCone2D((2, 0), (3, 6))
    assert (c.v1, c.v2) == ((1, 0), (1, 2))
    with pytest.raises(DegenerateInputError):
        RationalCone2D((1, 2), (-2, -4))
    with pytest.raises(DegenerateInputError):
        RationalCone2D((0, 0), (1, 2))


def test_membership():
    assert contains(Q1, (3, 0)) and not interior_contains(Q1, (3, 0))
    assert interior_contains(Q1, (1, 1))
    assert not contains(Q1, (-1, 2))


def test_bound_examples():
    assert effective_multiple_bound(Q1, (1, 1)) == 2
    assert contains(Q1, (2 * 1 - 1, 2 * 1 - 1))
    assert effective_multiple_bound(RationalCone2D((1, 0), (1, 2)), (2, 1)) == 5
    with pytest.raises(InvalidAnchorError):
        effective_multiple_bound(Q1, (1, 0))
    with pytest.raises(InvalidAnchorError):
        effective_multiple_bound(Q1, (1.5, 1))


def test_brute_force_examples():
    assert brute_force_verify(Q1, (1, 1), 2, 50) == (True, None)
    # m = 1 works in the first quadrant: xi - (1,1) stays in C for interior lattice xi
    ok, witness = brute_force_verify(Q1, (1, 1), 1, 5)
    assert ok and witness is None
    ok, witness = brute_force_verify(Q1, (2, 1), 1, 5)
    assert not ok and interior_contains(Q1, witness) and not contains(Q1, (witness[0] - 2, witness[1] - 1))
    assert brute_force_minimal_multiple(Q1, (2, 1), 5) == 2


def _random_cone(rnd):
    while True:
        v1 = (rnd.randint(-20, 20), rnd.randint(-20, 20))
        v2 = (rnd.randint(-20, 20), rnd.randint(-20, 20))
        if v1 == (0, 0) or v2 == (0, 0) or v1[0] * v2[1] - v1[1] * v2[0] == 0:
            continue
        cone = RationalCone2D(v1, v2)
        for _ in range(400):
            R = (rnd.randint(-20, 20), rnd.randint(-20, 20))
            if interior_contains(cone, R):
                return cone, R


def test_soundness_small_sample():
    rnd = random.Random(11)
    for _ in range(15):
        cone, R = _random_cone(rnd)
        m = effective_multiple_bound(cone, R)
        assert brute_force_verify(cone, R, m, 25) == (True, None)
        assert brute_force_minimal_multiple(cone, R, 25) <= m


def test_scaling_closure():
    rnd = random.Random(12)
    for _ in range(30):
        cone, R = _random_cone(rnd)
        m = brute_force_minimal_multiple(cone, R, 10)
        for _ in range(20):
            xi = (rnd.randint(-10, 10), rnd.randint(-10, 10))
            if interior_contains(cone, xi) and contains(cone, (m * xi[0] - R[0], m * xi[1] - R[1])):
                for t in range(1, 6):
                    assert contains(cone, (m * t * xi[0] - R[0], m * t * xi[1] - R[1]))


@given(st.tuples(st.integers(-10**6, 10**6), st.integers(-10**6, 10**6)),
       st.tuples(st.integers(-50, 50), st.integers(-50, 50)).filter(lambda u: u != (0, 0)))
def test_integral_distance_lower_bound(P, u):
    d = hyperplane_distance_sq(P, u)
    if d.numerator != 0:
        assert ExactDistanceSq(1, d.denominator) <= d


def test_distance_str():
    assert str(ExactDistanceSq(4, 2)) == "2/1"
    assert ExactDistanceSq(1, 5) < ExactDistanceSq(1, 4)
