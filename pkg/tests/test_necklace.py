from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from conftest import shapes_upto
from rookmatroid.errors import IncompatibleCorners, OutOfRange, ParseError, WrongSize
from rookmatroid.necklace import (
    Accept,
    Reject,
    classify,
    corner_sets,
    format_necklace,
    from_terms,
    loopless_coloopless,
    necklace_of_shape,
    parse_necklace,
    reconstruct_shape,
    validate_necklace,
)
from rookmatroid.shapes import SkewShape, inner_corners, outer_corners, parse_shape

WORKED = """11 5
1: 1 2 3 4 5
2: 2 3 4 5 6
3: 3 4 5 6 11
4: 4 5 6 9 11
5: 5 6 9 10 11
6: 6 8 9 10 11
7: 7 8 9 10 11
8: 5 8 9 10 11
9: 3 5 9 10 11
10: 1 3 5 10 11
11: 1 2 3 5 11
"""
UNIFORM = "4 2\n1: 1 2\n2: 2 3\n3: 3 4\n4: 1 4\n"


def all_necklaces(n, k):
    """Every sequence of k-subsets of [n] obeying the shift axioms."""
    out = []

    def extend(seq):
        i = len(seq)
        if i == n:
            g = from_terms(seq)
            if validate_necklace(g) is None:
                out.append(g)
            return
        cur = seq[-1]
        if i in cur:
            for j in range(1, n + 1):
                if j not in cur - {i}:
                    extend(seq + [(cur - {i}) | {j}])
        else:
            extend(seq + [cur])

    for first in combinations(range(1, n + 1), k):
        extend([frozenset(first)])
    return out


def test_parse_and_format():
    g = parse_necklace(WORKED)
    assert (g.n, g.k) == (11, 5) and g[1] == {1, 2, 3, 4, 5}
    assert format_necklace(g) == WORKED
    u = parse_necklace(UNIFORM)
    assert u.terms == necklace_of_shape(parse_shape("22")).terms


@pytest.mark.parametrize("text,err", [
    ("4 2\n1: 1 2\n2: 2 3\n3: 3\n4: 1 4\n", WrongSize),
    ("4 2\n1: 1 2\n2: 2 3\n3: 3 9\n4: 1 4\n", OutOfRange),
    ("4 2\n1: 1 2\n2: 2 3\n3: 3 4\n", ParseError),
    ("4\n1: 1 2\n", ParseError),
    ("4 2\n1: 1 2\n3: 2 3\n3: 3 4\n4: 1 4\n", ParseError),
    ("4 2\n1: 1 1\n2: 2 3\n3: 3 4\n4: 1 4\n", ParseError),
    ("", ParseError),
])
def test_parse_errors(text, err):
    with pytest.raises(err):
        parse_necklace(text)


def test_validate():
    assert validate_necklace(parse_necklace(WORKED)) is None
    # I_2 = I_1 - {1} + {1} is allowed; the first failure is at index 2
    assert validate_necklace(from_terms([{1, 2}, {1, 2}, {3, 4}, {1, 4}])) == 2
    assert validate_necklace(from_terms([{1, 3}, {2, 3}, {3, 4}, {1, 4}])) is None
    assert validate_necklace(from_terms([{1, 2}, {3, 4}, {3, 4}, {1, 4}])) == 1
    # 1 is not in I_1, so I_2 has to equal it
    assert validate_necklace(from_terms([{2, 3}, {2, 4}, {3, 4}, {1, 4}])) == 1
    for s in shapes_upto(9):
        assert validate_necklace(necklace_of_shape(s)) is None


def test_loops_and_coloops():
    assert loopless_coloopless(parse_necklace(WORKED)) == (True, True)
    assert loopless_coloopless(parse_necklace(UNIFORM)) == (True, True)
    const = from_terms([{1, 2}] * 4)
    assert loopless_coloopless(const) == (False, False)
    assert classify(const) == Reject("NotLoopless", 3)
    assert classify(from_terms([{1, 2}, {2, 1}, {3, 1}, {4, 1}])).condition == "NotColoopless"


def test_corner_sets():
    cs = corner_sets(parse_necklace(WORKED))
    assert set(cs.inner) == {(4, 7), (2, 8)}
    assert set(cs.outer) == {(3, 11), (5, 9), (6, 8)}
    u = corner_sets(parse_necklace(UNIFORM))
    assert u.inner == () and u.outer == ()


def test_inner_corner_in_second_last_column():
    s = parse_shape("22/1")
    assert [(c.row, c.col) for c in inner_corners(s)] == [(1, 3)]
    assert corner_sets(necklace_of_shape(s)).inner == ((1, 3),)


def test_corner_sets_match_shapes():
    for s in shapes_upto(9):
        cs = corner_sets(necklace_of_shape(s))
        assert set(cs.inner) == {(c.row, c.col) for c in inner_corners(s)}
        assert set(cs.outer) == {(c.row, c.col) for c in outer_corners(s)}


def test_corners_break_interval_shape():
    for s in shapes_upto(8):
        g = necklace_of_shape(s)
        for i in range(2, s.r + 1):
            if g.c(i) < g.c(i - 1):
                assert not _is_cyclic_interval(g[i], s.n)
        for i in range(s.r + 2, s.n):
            if g.r(i) > g.r(i + 1):
                assert not _is_cyclic_interval(g[i], s.n)


def _is_cyclic_interval(x, n):
    return any(set(((a - 1 + t) % n) + 1 for t in range(len(x))) == x for a in range(1, n + 1))


def test_reconstruct():
    s = reconstruct_shape([(4, 7), (2, 8)], [(3, 11), (5, 9), (6, 8)], 11, 5)
    assert s.lam == (5, 5, 4, 4, 2, 1) and s.mu == (2, 2, 1, 1, 0, 0)
    assert reconstruct_shape([], [], 4, 2) == SkewShape((2, 2))
    with pytest.raises(IncompatibleCorners):
        reconstruct_shape([(1, 2)], [], 2, 1)
    with pytest.raises(IncompatibleCorners):
        # an outer corner North-West of an inner corner
        reconstruct_shape([(2, 4)], [(2, 5)], 5, 3)


def test_classify_goldens():
    v = classify(parse_necklace(WORKED))
    assert isinstance(v, Accept) and v.shape == parse_shape("554421/2211")
    assert str(v) == "ROOK 554421/2211"
    terms = list(parse_necklace(WORKED).terms)
    terms[10] = frozenset({11, 1, 2, 4, 5})
    bad = classify(from_terms(terms))
    # rows 1,2,4,5 pair with columns 10,9,8,7, so the gap after row 2 needs (3,8)
    assert (bad.condition, bad.index, bad.cell) == ("4", 11, (3, 8))
    assert str(bad) == "NOT-ROOK condition=4 witness=I11:(3,8)"
    u = classify(parse_necklace(UNIFORM))
    assert isinstance(u, Accept) and u.shape == SkewShape((2, 2))


def test_five_conditions_need_the_round_trip():
    g = from_terms([{1, 2}, {2, 4}, {3, 4}, {4, 5}, {1, 5}])
    assert validate_necklace(g) is None and loopless_coloopless(g) == (True, True)
    v = classify(g)
    assert v.condition == "RoundTrip" and v.index == 2


def test_round_trip_exhaustive():
    for s in shapes_upto(9):
        v = classify(necklace_of_shape(s))
        assert isinstance(v, Accept) and v.shape == s, s


@pytest.mark.parametrize("n", range(2, 8))
def test_accepts_exactly_rook_necklaces(n):
    for k in range(1, n):
        rook = {necklace_of_shape(s).terms for s in shapes_upto(n) if (s.r, s.c) == (n - k, k)}
        accepted = set()
        for g in all_necklaces(n, k):
            v = classify(g)
            if isinstance(v, Accept):
                assert necklace_of_shape(v.shape).terms == g.terms
                accepted.add(g.terms)
        assert accepted == rook, (n, k)


@settings(max_examples=400, deadline=None)
@given(st.data())
def test_mutations_never_crash(data):
    s = data.draw(st.sampled_from(shapes_upto(9)))
    terms = [set(t) for t in necklace_of_shape(s).terms]
    for _ in range(data.draw(st.integers(1, 3))):
        i = data.draw(st.integers(0, s.n - 1))
        out = sorted(set(range(1, s.n + 1)) - terms[i])
        if not out:
            continue
        a = data.draw(st.sampled_from(sorted(terms[i])))
        b = data.draw(st.sampled_from(out))
        terms[i] = (terms[i] - {a}) | {b}
    g = from_terms(terms)
    v = classify(g)
    if isinstance(v, Accept):
        assert necklace_of_shape(v.shape).terms == g.terms
    else:
        assert v.condition in {"1", "2", "3", "4", "5", "NotLoopless", "NotColoopless", "NotNecklace", "RoundTrip"}
