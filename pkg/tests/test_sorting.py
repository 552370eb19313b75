import pytest
from hypothesis import given, settings, strategies as st

from conftest import shapes_upto
from rookmatroid.errors import NonTermination, SizeMismatch
from rookmatroid.placements import RookPlacement, decode, encode
from rookmatroid.rook import build
from rookmatroid.shapes import parse_shape
from rookmatroid.sorting import (
    Color,
    _relax,
    check_sort_pair,
    even,
    number_uncrossing,
    odd,
    sort_pair,
    sort_via_rooks,
    uncross,
    uncross_properties,
    verify_sort_closed,
)

CROSSED = "654442/421"
CROSSED_WHITE = {(1, 12), (2, 9), (3, 8), (4, 7)}
CROSSED_BLACK = {(1, 12), (2, 11), (5, 10), (6, 8)}


def test_sort_pair():
    assert sort_pair({1, 2, 4, 9, 10}, {2, 3, 4, 5, 8}) == ({1, 2, 4, 5, 9}, {2, 3, 4, 8, 10})
    assert sort_pair({1, 3}, {1, 3}) == ({1, 3}, {1, 3})
    # merged 1 <= 2 <= 3 <= 4 is read alternately
    assert sort_pair({1, 3}, {2, 4}) == ({1, 3}, {2, 4})
    assert sort_pair({1, 2}, {3, 4}) == ({1, 3}, {2, 4})
    with pytest.raises(SizeMismatch):
        sort_pair({1}, {1, 2})


def test_uncross_golden_654442_421():
    s = parse_shape(CROSSED)
    z = uncross(RookPlacement(s, CROSSED_WHITE), RookPlacement(s, CROSSED_BLACK))
    assert z.of_color(Color.WHITE) == {(1, 12), (3, 9), (4, 8), (6, 7)}
    assert z.of_color(Color.BLACK) == {(1, 12), (2, 10), (2, 11), (5, 8)}
    y = number_uncrossing(z)
    got = [(rk.cell, rk.color, x) for rk, x in y.numbering]
    assert got == [
        ((1, 12), Color.BLACK, 1),
        ((1, 12), Color.WHITE, 2),
        ((2, 11), Color.BLACK, 3),
        ((2, 10), Color.BLACK, 4),
        ((3, 9), Color.WHITE, 5),
        ((4, 8), Color.WHITE, 6),
        ((5, 8), Color.BLACK, 7),
        ((6, 7), Color.WHITE, 8),
    ]


def test_uncross_golden_55532_21():
    s = parse_shape("55532/21")
    I, J = {1, 2, 4, 9, 10}, {2, 3, 4, 5, 8}
    white, black = decode(s, I), decode(s, J)
    assert white.rooks == {(1, 8), (2, 7), (4, 6)}
    assert black.rooks == {(2, 10), (3, 9), (4, 7), (5, 6)}
    z = uncross(white, black)
    assert z.of_color(Color.WHITE) == {(2, 8), (3, 7), (4, 6)}
    assert z.of_color(Color.BLACK) == {(1, 10), (2, 9), (4, 7), (5, 6)}
    y = number_uncrossing(z)
    assert [rk.cell for rk in y.in_order()] == [(1, 10), (2, 9), (2, 8), (3, 7), (4, 7), (4, 6), (5, 6)]
    assert odd(y).rooks == {(1, 10), (2, 8), (4, 7), (5, 6)}
    assert encode(odd(y)) == {1, 2, 4, 5, 9}
    assert encode(even(y)) == {2, 3, 4, 8, 10}


def test_identical_and_single():
    s = parse_shape("54421/31")
    rho = decode(s, {2, 3, 4, 7, 10})
    y = number_uncrossing(uncross(rho, rho))
    assert odd(y) == rho and even(y) == rho
    one = RookPlacement(s, {(3, 7)})
    none = RookPlacement(s, set())
    y = number_uncrossing(uncross(one, none))
    assert [x for _, x in y.numbering] == [1]


def test_iteration_cap():
    rooks = [[1, 3, Color.WHITE], [2, 4, Color.BLACK]]
    with pytest.raises(NonTermination):
        _relax(rooks, False, [0])


@pytest.mark.parametrize("spec", ["22", "54421/31", "55532/21", "21/1"])
def test_sort_closed_examples(spec):
    assert verify_sort_closed(build(parse_shape(spec)), properties=True) is None


def test_sort_closed_small_exhaustive():
    for s in shapes_upto(6):
        assert verify_sort_closed(build(s), properties=True) is None, s


@settings(max_examples=300, deadline=None)
@given(st.data())
def test_random_pairs_on_larger_shapes(data):
    s = data.draw(st.sampled_from(shapes_upto(9)))
    rm = build(s)
    bases = sorted(rm.bases, key=sorted)
    I = data.draw(st.sampled_from(bases))
    J = data.draw(st.sampled_from(bases))
    assert check_sort_pair(rm, I, J, properties=True) is None
    assert sort_via_rooks(s, I, J) == sort_pair(I, J)


def test_properties_detect_breakage():
    s = parse_shape("22")
    rho1, rho2 = RookPlacement(s, {(1, 3)}), RookPlacement(s, {(2, 4)})
    y = number_uncrossing(uncross(rho1, rho2))
    assert uncross_properties(s, {1, 4}, {2, 3}, y) == []
    # claiming the wrong bases trips the occupancy checks
    assert uncross_properties(s, {1, 3}, {1, 4}, y) == ["rows"]


def test_render():
    s = parse_shape(CROSSED)
    z = uncross(RookPlacement(s, CROSSED_WHITE), RookPlacement(s, CROSSED_BLACK))
    lines = z.render().splitlines()
    assert lines[1].split() == ["1", ".", "*"]
    assert number_uncrossing(z).render().splitlines()[1].split()[-1] == "1+2"
