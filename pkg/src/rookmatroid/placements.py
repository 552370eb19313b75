"""Non-nesting rook placements and their encoding as basis sets.

A placement ``rho`` is encoded by ``R(rho) | C(rho)``: the rows it occupies
together with the columns it leaves empty.  For a non-nesting placement the
rows sorted upwards pair with the occupied columns sorted downwards, which
makes the encoding invertible.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import InvalidPlacement, OffBoard, SizeMismatch
from .shapes import Cell

BasisSet = frozenset[int]


def strictly_nested(s: Cell, t: Cell) -> bool:
    """True when ``t`` lies strictly South-East of ``s``."""
    return s[0] < t[0] and s[1] < t[1]


def is_non_attacking(rooks: Iterable[Cell]) -> bool:
    rooks = list(rooks)
    return len({i for i, _ in rooks}) == len(rooks) == len({j for _, j in rooks})


def is_non_nesting(rooks: Iterable[Cell]) -> bool:
    """Non-attacking and no rook strictly South-East of another."""
    rooks = sorted(rooks)
    if not is_non_attacking(rooks):
        return False
    return all(a[1] > b[1] for a, b in zip(rooks, rooks[1:]))


@dataclass(frozen=True)
class RookPlacement:
    board: object
    rooks: frozenset[Cell]

    def __post_init__(self):
        object.__setattr__(self, "rooks", frozenset(self.rooks))
        off = [cell for cell in self.rooks if cell not in self.board]
        if off:
            raise InvalidPlacement(f"rooks {sorted(off)} are not on the board")
        if not is_non_nesting(self.rooks):
            raise InvalidPlacement(f"rooks {sorted(self.rooks)} attack or nest")

    def __len__(self) -> int:
        return len(self.rooks)

    def sorted_rooks(self) -> list[Cell]:
        return sorted(self.rooks)

    def rows(self) -> set[int]:
        return {i for i, _ in self.rooks}

    def cols(self) -> set[int]:
        return {j for _, j in self.rooks}


def encode(rho: RookPlacement) -> BasisSet:
    board = rho.board
    empty_cols = set(range(board.r + 1, board.r + board.c + 1)) - rho.cols()
    return frozenset(rho.rows() | empty_cols)


def decode(board, b: Iterable[int]) -> RookPlacement:
    """The unique non-nesting placement whose encoding is ``b``.

    Raises OffBoard when the forced pairing leaves the board, which certifies
    that ``b`` is not a basis.
    """
    b = frozenset(b)
    if len(b) != board.c:
        raise SizeMismatch(f"basis {sorted(b)} should have {board.c} elements")
    if any(not 1 <= e <= board.r + board.c for e in b):
        raise SizeMismatch(f"basis {sorted(b)} leaves the ground set [1, {board.r + board.c}]")
    rows = sorted(e for e in b if e <= board.r)
    cols = sorted((j for j in range(board.r + 1, board.r + board.c + 1) if j not in b), reverse=True)
    if len(rows) != len(cols):
        raise SizeMismatch(f"{len(rows)} rows against {len(cols)} occupied columns")
    rooks = list(zip(rows, cols))
    for cell in rooks:
        if cell not in board:
            raise OffBoard(cell)
    return RookPlacement(board, frozenset(rooks))


def _placements(board) -> list[tuple[Cell, ...]]:
    rows = [board.row_cells(i) for i in range(1, board.r + 1)]
    out: list[tuple[Cell, ...]] = []

    def extend(i: int, prev_col: int, chosen: tuple[Cell, ...]) -> None:
        if i > board.r:
            out.append(chosen)
            return
        extend(i + 1, prev_col, chosen)
        for j in rows[i - 1]:
            if j < prev_col:
                extend(i + 1, j, chosen + ((i, j),))

    extend(1, board.r + board.c + 1, ())
    return out


def enumerate_non_nesting(board) -> list[RookPlacement]:
    """Every non-nesting placement on the board, ordered by encoding."""
    placements = [RookPlacement(board, frozenset(p)) for p in _placements(board)]
    placements.sort(key=lambda rho: sorted(encode(rho)))
    return placements


def render_placement(rho: RookPlacement) -> str:
    """Shape grid with ``R`` for rooks, ``.`` for free cells, blank for holes."""
    from .render import render_grid

    marks = {cell: "R" for cell in rho.rooks}
    return render_grid(rho.board, marks)
