"""Vector enumeration, dot products, projective representatives."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from orthocount.errors import BoundExceededError
from orthocount.fields import make_field
from orthocount.vectors import (
    decode_vector,
    dot,
    encode_vector,
    enumerate_nonzero_vectors,
    format_vector,
    is_orthogonal,
    parse_vector,
    projective_representatives,
    scale,
)

GF2 = make_field(2, 1)
GF3 = make_field(3, 1)
GF5 = make_field(5, 1)


def test_dot_examples():
    assert dot(GF3, (1, 0), (0, 1)) == 0
    assert dot(GF3, (1, 1, 1), (1, 1, 1)) == 0
    assert dot(GF5, (1, 2), (2, 4)) == 0
    assert dot(GF5, (1, 1), (1, 1)) == 2


def test_dot_dimension_mismatch():
    with pytest.raises(ValueError):
        dot(GF3, (1, 0), (1, 0, 0))


def test_is_orthogonal_examples():
    assert is_orthogonal(GF3, (1, 1, 1), (1, 1, 1))
    assert not is_orthogonal(GF2, (1, 0), (1, 0))
    assert is_orthogonal(GF5, (1, 2), (1, 2))


def test_enumeration_order_gf2_d2():
    assert enumerate_nonzero_vectors(GF2, 2) == [(1, 0), (0, 1), (1, 1)]


def test_enumeration_counts():
    assert len(enumerate_nonzero_vectors(GF3, 3)) == 26
    assert len(enumerate_nonzero_vectors(GF5, 4)) == 624


def test_enumeration_is_encoding_order():
    vecs = enumerate_nonzero_vectors(GF5, 3)
    codes = [encode_vector(v, 5) for v in vecs]
    assert codes == list(range(1, 125))
    assert all(decode_vector(c, 5, 3) == v for c, v in zip(codes, vecs))


def test_enumeration_bound():
    with pytest.raises(BoundExceededError):
        enumerate_nonzero_vectors(GF5, 4, max_points=600)


def test_projective_representatives_gf3_d2():
    reps = projective_representatives(GF3, 2)
    assert set(reps) == {(1, 0), (1, 1), (1, 2), (0, 1)}
    assert reps == [(1, 0), (0, 1), (1, 1), (1, 2)]  # encoding order


def test_projective_counts():
    assert len(projective_representatives(GF3, 3)) == 13
    gf2 = GF2
    for d in (2, 3, 4, 5):
        reps = projective_representatives(gf2, d)
        assert len(reps) == 2**d - 1
        assert reps == enumerate_nonzero_vectors(gf2, d)


@pytest.mark.parametrize("field,d", [(GF2, 3), (GF3, 2), (GF3, 3), (GF5, 2), (make_field(2, 2), 2)])
def test_representatives_cover_all_classes(field, d):
    reps = projective_representatives(field, d)
    q = field.q
    assert len(reps) * (q - 1) == len(enumerate_nonzero_vectors(field, d))
    seen = {}
    for v in enumerate_nonzero_vectors(field, d):
        matches = [
            (s, rep) for rep in reps for s in range(1, q) if scale(field, s, rep) == v
        ]
        assert len(matches) == 1  # unique scalar times unique representative
        seen[v] = matches[0]
    # first nonzero coordinate of every representative is 1
    for rep in reps:
        assert next(c for c in rep if c) == 1


def test_bilinearity_exhaustive_gf3_d2():
    vecs = [(a, b) for a in range(3) for b in range(3)]
    for u in vecs:
        for w in vecs:
            for v in vecs:
                uw = tuple(GF3.add(a, b) for a, b in zip(u, w))
                assert dot(GF3, uw, v) == GF3.add(dot(GF3, u, v), dot(GF3, w, v))


@settings(max_examples=150)
@given(st.data())
def test_bilinearity_sampled(data):
    field = data.draw(st.sampled_from([GF5, make_field(7, 1), make_field(2, 3)]))
    d = data.draw(st.integers(1, 5))
    coords = st.integers(0, field.q - 1)
    u = tuple(data.draw(coords) for _ in range(d))
    w = tuple(data.draw(coords) for _ in range(d))
    v = tuple(data.draw(coords) for _ in range(d))
    s = data.draw(coords)
    uw = tuple(field.add(a, b) for a, b in zip(u, w))
    assert dot(field, uw, v) == field.add(dot(field, u, v), dot(field, w, v))
    assert dot(field, scale(field, s, u), v) == field.mul(s, dot(field, u, v))


def test_vector_serialization_round_trip():
    assert format_vector((1, 0, 2)) == "1,0,2"
    assert parse_vector("1,0,2") == (1, 0, 2)
    assert parse_vector(" 4,4 \n") == (4, 4)
    with pytest.raises(ValueError):
        parse_vector("1,x,2")
