from math import comb

import pytest
from hypothesis import given

from conftest import shape_strategy, shapes_upto
from rookmatroid.errors import InvalidPlacement, OffBoard, SizeMismatch
from rookmatroid.placements import (
    RookPlacement,
    decode,
    encode,
    enumerate_non_nesting,
    is_non_nesting,
    render_placement,
    strictly_nested,
)
from rookmatroid.shapes import Board, SkewShape, parse_shape


def test_encode_examples():
    s = parse_shape("55443/31")
    assert encode(RookPlacement(s, {(1, 10), (3, 9), (4, 8), (5, 6)})) == {1, 3, 4, 5, 7}
    assert encode(RookPlacement(parse_shape("22"), set())) == {3, 4}
    t = parse_shape("54421/31")
    assert encode(RookPlacement(t, {(2, 9), (3, 8), (4, 6)})) == {2, 3, 4, 7, 10}


def test_decode_examples():
    s = parse_shape("55443/31")
    assert decode(s, {1, 3, 4, 5, 7}).rooks == {(1, 10), (3, 9), (4, 8), (5, 6)}
    assert decode(parse_shape("22"), {3, 4}).rooks == set()
    diag = Board(2, 2, {(1, 3), (2, 4)})
    with pytest.raises(OffBoard) as info:
        decode(diag, {1, 2})
    assert info.value.cell == (1, 4)
    with pytest.raises(SizeMismatch):
        decode(parse_shape("22"), {1})


def test_predicates():
    assert not is_non_nesting({(1, 3), (2, 4)})
    assert is_non_nesting({(1, 4), (2, 3)})
    assert not is_non_nesting({(1, 4), (1, 3)})
    assert strictly_nested((2, 9), (5, 10))
    assert not strictly_nested((2, 9), (5, 9))


def test_placement_validation():
    s = parse_shape("22")
    with pytest.raises(InvalidPlacement):
        RookPlacement(s, {(1, 3), (2, 4)})
    with pytest.raises(InvalidPlacement):
        RookPlacement(s, {(1, 5)})


def test_enumeration_counts():
    assert len(enumerate_non_nesting(parse_shape("22"))) == 6
    assert len(enumerate_non_nesting(SkewShape((2, 2, 2)))) == 10
    diag = enumerate_non_nesting(Board(2, 2, {(1, 3), (2, 4)}))
    assert sorted(sorted(p.rooks) for p in diag) == [[], [(1, 3)], [(2, 4)]]


@pytest.mark.parametrize("r", range(1, 6))
@pytest.mark.parametrize("c", range(1, 6))
def test_rectangle_count(r, c):
    assert len(enumerate_non_nesting(SkewShape((c,) * r))) == comb(r + c, c)


def test_roundtrip_exhaustive():
    for s in shapes_upto(9):
        seen = set()
        for rho in enumerate_non_nesting(s):
            b = encode(rho)
            assert len(b) == s.c
            assert decode(s, b) == rho
            seen.add(b)
            rows = sorted(rho.rooks)
            assert all(a[1] > b_[1] for a, b_ in zip(rows, rows[1:]))
        assert len(seen) == len(enumerate_non_nesting(s))


@given(shape_strategy(9))
def test_enumeration_sorted_and_complete(s):
    ps = enumerate_non_nesting(s)
    keys = [sorted(encode(p)) for p in ps]
    assert keys == sorted(keys)
    assert any(not p.rooks for p in ps)


def test_render():
    s = parse_shape("55443/31")
    text = render_placement(decode(s, {1, 3, 4, 5, 7}))
    assert text.splitlines()[0].split() == ["6", "7", "8", "9", "10"]
    assert text.splitlines()[1].split() == ["1", ".", "R"]
    assert text.endswith("\n")
