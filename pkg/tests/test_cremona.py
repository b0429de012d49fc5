import itertools

import pytest

from blowup.cremona import (
    cremona_transform,
    degree_growing_orbit,
    fixes_canonical,
    is_isometry_witness,
    smallest_triple,
)
from blowup.errors import DegenerateInputError
from blowup.picard import DivisorClass, canonical_class, homogeneous, intersect, parse_divisor as P

from conftest import random_class


def test_examples():
    A1 = cremona_transform(P("1;0^9"), 1, 2, 3)
    assert A1 == P("2;1,1,1,0^6")
    A2 = cremona_transform(A1, 4, 5, 6)
    assert A2 == P("4;1,1,1,2,2,2,0,0,0")
    assert intersect(A1, A1) == intersect(A2, A2) == 1


@pytest.mark.parametrize("idx", [(1, 1, 2), (0, 1, 2), (1, 2, 11)])
def test_bad_indices(idx):
    with pytest.raises(DegenerateInputError):
        cremona_transform(homogeneous(3, 1, 10), *idx)


def test_isometry_involution_random(rng):
    for _ in range(300):
        r = rng.randint(3, 14)
        D, E = random_class(rng, r, -1000, 1000), random_class(rng, r, -1000, 1000)
        i, j, k = rng.sample(range(1, r + 1), 3)
        assert is_isometry_witness(D, E, i, j, k)
        assert cremona_transform(cremona_transform(D, i, j, k), i, j, k) == D
        assert fixes_canonical(r, i, j, k)


def test_index_order_irrelevant():
    D = P("7;3,2,1,1,0")
    base = cremona_transform(D, 1, 2, 4)
    for perm in itertools.permutations((1, 2, 4)):
        assert cremona_transform(D, *perm) == base


def test_canonical_pairing():
    D = P("13;6,6,6,2,2,2,4,4,4")
    K = canonical_class(9)
    assert is_isometry_witness(K, D, 1, 2, 3)
    assert is_isometry_witness(homogeneous(1, 0, 9), DivisorClass(0, (-1,) + (0,) * 8), 1, 2, 3)


def test_smallest_triple_ties():
    assert smallest_triple(P("4;1,1,1,2,2,2,0,0,0")) == (7, 8, 9)
    assert smallest_triple(P("1;0^9")) == (1, 2, 3)
    assert smallest_triple(P("5;2,1,2,1,1")) == (2, 4, 5)


def test_orbit_r9():
    orbit = degree_growing_orbit(9, 50)
    assert [A.d for A in orbit[:4]] == [1, 2, 4, 8]
    K = canonical_class(9)
    for A in orbit:
        assert intersect(A, A) == 1
        assert intersect(K, A) == -3
        assert min(A.mults) >= 0
    degs = [A.d for A in orbit]
    assert all(a < b for a, b in zip(degs[3:], degs[4:]))


def test_orbit_r10_grows_fast():
    orbit = degree_growing_orbit(10, 40)
    assert orbit[-1].d > 10**6
    assert all(intersect(A, A) == 1 for A in orbit)


def test_orbit_rejects_small_r():
    with pytest.raises(DegenerateInputError):
        degree_growing_orbit(8, 5)
    with pytest.raises(DegenerateInputError):
        degree_growing_orbit(9, 0)
