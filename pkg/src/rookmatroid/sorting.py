"""Sorting of basis pairs and the uncrossing of double rook placements.

``uncross`` overlays two non-nesting placements (white for the first, black
for the second) and repeatedly swaps the rows of strictly nested pairs until
none remain: first between rooks of different colors, then between rooks of
the same color.  Numbering the result row by row, right to left, and keeping
the odd or even rooks recovers ``sort1`` and ``sort2`` of the two bases.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import product
from typing import Iterable

from .errors import InvalidPlacement, NonTermination, SizeMismatch
from .placements import BasisSet, RookPlacement, decode, encode, strictly_nested
from .render import render_grid
from .shapes import Cell


class Color(enum.IntEnum):
    # the value doubles as the within-cell scan rank: black is met first
    BLACK = 0
    WHITE = 1


@dataclass(frozen=True, order=True)
class ColoredRook:
    cell: Cell
    color: Color


def _scan_key(rook: ColoredRook) -> tuple[int, int, int]:
    (i, j), color = rook.cell, rook.color
    return (i, -j, int(color))


@dataclass(frozen=True)
class DoubleRookPlacement:
    """A white and a black placement drawn on the same shape.

    ``rooks`` is kept in scan order: rows top to bottom, each row right to
    left, black before white inside a shared cell.
    """

    shape: object
    rooks: tuple[ColoredRook, ...]

    def __post_init__(self):
        rooks = tuple(sorted(self.rooks, key=_scan_key))
        seen = set()
        for rk in rooks:
            if rk.cell not in self.shape:
                raise InvalidPlacement(f"rook at {rk.cell} is off the shape")
            if (rk.cell, rk.color) in seen:
                raise InvalidPlacement(f"two {rk.color.name.lower()} rooks at {rk.cell}")
            seen.add((rk.cell, rk.color))
        object.__setattr__(self, "rooks", rooks)

    def of_color(self, color: Color) -> frozenset[Cell]:
        return frozenset(rk.cell for rk in self.rooks if rk.color == color)

    def row_counts(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for rk in self.rooks:
            out[rk.cell[0]] = out.get(rk.cell[0], 0) + 1
        return out

    def col_counts(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for rk in self.rooks:
            out[rk.cell[1]] = out.get(rk.cell[1], 0) + 1
        return out

    def render(self) -> str:
        """``R`` white, ``r`` black, ``*`` a cell holding both."""
        marks: dict[Cell, str] = {}
        for rk in self.rooks:
            mark = "R" if rk.color == Color.WHITE else "r"
            marks[rk.cell] = "*" if rk.cell in marks else mark
        return render_grid(self.shape, marks)


@dataclass(frozen=True)
class NumberedUncrossing:
    base: DoubleRookPlacement
    numbering: tuple[tuple[ColoredRook, int], ...]

    def number_of(self, rook: ColoredRook) -> int:
        return dict(self.numbering)[rook]

    def in_order(self) -> list[ColoredRook]:
        return [rk for rk, _ in sorted(self.numbering, key=lambda p: p[1])]

    def render(self) -> str:
        marks: dict[Cell, list[str]] = {}
        for rk, x in self.numbering:
            marks.setdefault(rk.cell, []).append(str(x))
        return render_grid(self.base.shape, {c: "+".join(v) for c, v in marks.items()})


def sort_pair(I: Iterable[int], J: Iterable[int]) -> tuple[BasisSet, BasisSet]:
    """Split the sorted multiset ``I + J`` into alternate entries."""
    I, J = sorted(I), sorted(J)
    if len(I) != len(J):
        raise SizeMismatch(f"|I| = {len(I)} but |J| = {len(J)}")
    merged = sorted(I + J)
    return frozenset(merged[0::2]), frozenset(merged[1::2])


def _relax(rooks: list[list[int]], same_color: bool, budget: list[int]) -> None:
    """Swap strictly nested pairs in place until none of the requested kind remain.

    Each rook is ``[row, col, color]``.  A pass walks rows top to bottom and
    every row right to left; once a swap happens the current row is finished
    and the pass restarts at the top.  The partner of a nesting rook ``s`` is
    taken from the first later row holding a rook nested by ``s``, and the
    rightmost such rook in that row.
    """
    rows = sorted({rk[0] for rk in rooks})
    while True:
        mutated = False
        for i in rows:
            last = None
            while True:
                s = None
                for rk in rooks:
                    if rk[0] != i:
                        continue
                    key = (-rk[1], rk[2])
                    if last is not None and key <= last:
                        continue
                    if s is None or key < (-s[1], s[2]):
                        s = rk
                if s is None:
                    break
                last = (-s[1], s[2])
                si, sj, sc = s
                best = None
                for t in rooks:
                    if t[0] > si and t[1] > sj and (t[2] == sc) == same_color:
                        if best is None or t[0] < best[0] or (t[0] == best[0] and t[1] > best[1]):
                            best = t
                if best is not None:
                    s[0], best[0] = best[0], si
                    mutated = True
                    budget[0] -= 1
                    if budget[0] < 0:
                        raise NonTermination("uncrossing exceeded its iteration cap")
            if mutated:
                break
        if not mutated:
            return


def uncross(rho1: RookPlacement, rho2: RookPlacement) -> DoubleRookPlacement:
    """Uncross ``rho1`` (white) against ``rho2`` (black)."""
    if rho1.board != rho2.board:
        raise SizeMismatch("placements live on different shapes")
    rooks = [[i, j, Color.WHITE] for i, j in rho1.rooks]
    rooks += [[i, j, Color.BLACK] for i, j in rho2.rooks]
    budget = [max(1, len(rooks)) ** 4]
    _relax(rooks, False, budget)
    _relax(rooks, True, budget)
    return DoubleRookPlacement(rho1.board, tuple(ColoredRook((i, j), Color(c)) for i, j, c in rooks))


def number_uncrossing(z: DoubleRookPlacement) -> NumberedUncrossing:
    """Number the rooks 1, 2, ... in scan order."""
    return NumberedUncrossing(z, tuple((rk, x) for x, rk in enumerate(z.rooks, start=1)))


def odd(y: NumberedUncrossing) -> RookPlacement:
    return RookPlacement(y.base.shape, frozenset(rk.cell for rk, x in y.numbering if x % 2 == 1))


def even(y: NumberedUncrossing) -> RookPlacement:
    return RookPlacement(y.base.shape, frozenset(rk.cell for rk, x in y.numbering if x % 2 == 0))


def sort_via_rooks(shape, I, J) -> tuple[BasisSet, BasisSet]:
    """``(encode(odd), encode(even))`` of the numbered uncrossing of ``I`` and ``J``."""
    y = number_uncrossing(uncross(decode(shape, I), decode(shape, J)))
    return encode(odd(y)), encode(even(y))


def uncross_properties(shape, I, J, y: NumberedUncrossing) -> list[str]:
    """Names of the structural properties of an uncrossing that fail.

    ``rows``: a row holds as many rooks as it occurs in ``I + J``.
    ``cols``: a column holds ``2 -`` its multiplicity in ``I + J``.
    ``nesting``: no two rooks are strictly nested.
    ``order``: each rook lies weakly South-West of the one numbered before it.
    """
    failed = []
    z = y.base
    mult: dict[int, int] = {}
    for e in list(I) + list(J):
        mult[e] = mult.get(e, 0) + 1
    rc, cc = z.row_counts(), z.col_counts()
    if any(rc.get(i, 0) != mult.get(i, 0) for i in range(1, shape.r + 1)):
        failed.append("rows")
    if any(cc.get(j, 0) != 2 - mult.get(j, 0) for j in range(shape.r + 1, shape.n + 1)):
        failed.append("cols")
    cells = [rk.cell for rk in z.rooks]
    if any(strictly_nested(s, t) for s, t in product(cells, cells)):
        failed.append("nesting")
    ordered = [rk.cell for rk in y.in_order()]
    if any(not (q[0] >= p[0] and q[1] <= p[1]) for p, q in zip(ordered, ordered[1:])):
        failed.append("order")
    return failed


@dataclass(frozen=True)
class SortFailure:
    I: BasisSet
    J: BasisSet
    reason: str


def check_sort_pair(rm, I, J, *, properties: bool = False) -> str | None:
    """Why the pair ``(I, J)`` breaks sort-closure, or None."""
    s1, s2 = sort_pair(I, J)
    if s1 not in rm.bases or s2 not in rm.bases:
        return "sort1/sort2 not bases"
    shape = rm.shape
    try:
        y = number_uncrossing(uncross(rm.placement(I), rm.placement(J)))
        got = encode(odd(y)), encode(even(y))
    except InvalidPlacement as exc:
        return f"odd/even not a placement: {exc}"
    if got != (s1, s2):
        return "odd/even encodings differ from sort1/sort2"
    if properties:
        bad = uncross_properties(shape, I, J, y)
        if bad:
            return "uncross properties failed: " + ",".join(bad)
    return None


def verify_sort_closed(rm, *, properties: bool = False) -> SortFailure | None:
    """Scan every ordered basis pair; None when all pass."""
    bases = sorted(rm.bases, key=sorted)
    for I in bases:
        for J in bases:
            reason = check_sort_pair(rm, I, J, properties=properties)
            if reason is not None:
                return SortFailure(I, J, reason)
    return None
