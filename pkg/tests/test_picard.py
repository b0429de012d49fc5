import pytest
from hypothesis import given, strategies as st

from blowup.errors import DegenerateInputError, DimensionMismatchError, DivisorParseError
from blowup.picard import (
    DivisorClass,
    SurfaceContext,
    add,
    canonical_class,
    edim,
    format_divisor,
    homogeneous,
    intersect,
    parse_divisor,
    primitive_part,
    scale,
    vdim,
)

from conftest import random_class

P = parse_divisor


def test_intersect_examples():
    assert intersect(P("1;0^10"), P("0;-1,0^9")) == 0
    assert intersect(P("19;6^10"), P("19;6^10")) == 1
    # (-3)(57) + 10*18
    assert intersect(P("57;18^10"), P("-3;-1^10")) == 9


def test_intersect_mismatch():
    with pytest.raises(DimensionMismatchError):
        intersect(P("1;1"), P("1;1,1"))


def test_canonical_class():
    assert canonical_class(0) == DivisorClass(-3, ())
    assert canonical_class(10) == P("-3;-1^10")
    assert intersect(canonical_class(10), P("57;18^10")) == 9


@pytest.mark.parametrize(
    "text, v, e",
    [("0;0^10", 0, 0), ("19;6^10", -1, -1), ("57;18^10", 0, 0), ("1;0^10", 2, 2), ("2;", 5, 5)],
)
def test_vdim_edim(text, v, e):
    assert vdim(P(text)) == v
    assert edim(P(text)) == e


def test_vdim_context():
    D = P("57;18^10")
    assert vdim(D, SurfaceContext(10, p_a=3)) == 3
    with pytest.raises(DimensionMismatchError):
        vdim(D, SurfaceContext(9))


def test_scale_add_primitive():
    assert scale(3, P("19;6^10")) == P("57;18^10")
    assert primitive_part(P("2220;702^10")) == (6, P("370;117^10"))
    assert add(P("1;0^10"), P("-1;0^10")) == P("0;0^10")
    assert primitive_part(P("-4;2,6")) == (2, P("-2;1,3"))
    with pytest.raises(DegenerateInputError):
        primitive_part(P("0;0^3"))


def test_operators():
    D, E = P("3;1,2"), P("1;0,1")
    assert D + E == P("4;1,3")
    assert D - E == P("2;1,1")
    assert 2 * D == P("6;2,4")
    assert -D == P("-3;-1,-2")


@pytest.mark.parametrize("text", ["banana", "", ";1", "3;1,,2", "3;1^0", "3;x^2", "3;1^"])
def test_parse_rejects(text):
    with pytest.raises(DivisorParseError):
        parse_divisor(text)


def test_parse_forms():
    assert P("-3;") == DivisorClass(-3, ())
    assert P("5") == DivisorClass(5, ())
    assert P(" 4 ; 2 , 1^2 ") == DivisorClass(4, (2, 1, 1))
    assert P("−3;−1^2") == DivisorClass(-3, (-1, -1))
    assert format_divisor(P("57;18^10")) == "57;18^10"
    assert format_divisor(P("4;1,1,1,2,2,2,0,0,0")) == "4;1^3,2^3,0^3"
    assert format_divisor(DivisorClass(-3, ())) == "-3;"


classes = st.builds(
    lambda d, ms: DivisorClass(d, tuple(ms)),
    st.integers(-10**30, 10**30),
    st.lists(st.integers(-10**30, 10**30), max_size=15),
)


@given(classes)
def test_format_roundtrip(D):
    assert parse_divisor(format_divisor(D)) == D


@given(st.integers(0, 12).flatmap(lambda r: st.tuples(*[st.lists(st.integers(-10**9, 10**9), min_size=r + 1, max_size=r + 1)] * 3)),
       st.integers(-1000, 1000), st.integers(-1000, 1000))
def test_bilinear_symmetric(vecs, a, b):
    D, E, F = (DivisorClass(v[0], tuple(v[1:])) for v in vecs)
    lhs = intersect(add(scale(a, D), scale(b, E)), F)
    assert lhs == a * intersect(D, F) + b * intersect(E, F)
    assert intersect(D, E) == intersect(E, D)


def test_vdim_expanded_formula(rng):
    for _ in range(1000):
        r = rng.randint(0, 20)
        D = random_class(rng, r)
        expanded = D.d * (D.d + 3) // 2 - sum(m * (m + 1) // 2 for m in D.mults)
        assert vdim(D) == expanded
        K = canonical_class(r)
        assert 2 * vdim(D) == intersect(D, D) - intersect(K, D)


@given(classes.filter(lambda D: not D.is_zero()))
def test_primitive_part_recovers(D):
    g, Pp = primitive_part(D)
    assert g > 0
    assert scale(g, Pp) == D


def test_homogeneous():
    assert homogeneous(57, 18, 10) == P("57;18^10")
    assert homogeneous(1, 0, 0).r == 0
