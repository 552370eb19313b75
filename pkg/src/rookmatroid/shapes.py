"""Partitions, boards and skew shapes.

Rows of a board with ``r`` rows and ``c`` columns are labelled ``1..r`` from
top to bottom and columns ``r+1..r+c`` from left to right.  A cell is the
pair ``(row, col)`` in this labelling, so that row and column labels together
form the ground set ``[1, r+c]`` of the rook matroid.
"""

from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator

from .errors import EmptyLine, NotAPartition, NotContained, ParseError

Cell = tuple[int, int]
Partition = tuple[int, ...]


def check_partition(parts: Iterable[int]) -> Partition:
    """Return ``parts`` as a tuple, raising NotAPartition unless it is weakly
    decreasing with positive entries.  Trailing zeroes are dropped."""
    parts = tuple(parts)
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    if any(p <= 0 for p in parts):
        raise NotAPartition(f"parts must be positive: {parts}")
    for a, b in zip(parts, parts[1:]):
        if b > a:
            raise NotAPartition(f"parts must be weakly decreasing: {parts}")
    return parts


@dataclass(frozen=True)
class Board:
    """A set of cells inside an ``r x c`` grid with no empty row or column."""

    r: int
    c: int
    cell_set: frozenset[Cell]

    def __post_init__(self):
        object.__setattr__(self, "cell_set", frozenset(self.cell_set))
        for i, j in self.cell_set:
            if not (1 <= i <= self.r and self.r < j <= self.r + self.c):
                raise ParseError(f"cell {(i, j)} outside the {self.r}x{self.c} grid")
        rows = {i for i, _ in self.cell_set}
        cols = {j for _, j in self.cell_set}
        for i in range(1, self.r + 1):
            if i not in rows:
                raise EmptyLine(f"row {i} has no cell")
        for j in range(self.r + 1, self.r + self.c + 1):
            if j not in cols:
                raise EmptyLine(f"column {j} has no cell")

    @property
    def n(self) -> int:
        return self.r + self.c

    def __contains__(self, cell) -> bool:
        return cell in self.cell_set

    def row_cells(self, i: int) -> list[int]:
        return sorted(j for a, j in self.cell_set if a == i)


@dataclass(frozen=True)
class SkewShape:
    """The skew Ferrers board of ``lam / mu`` (English convention).

    ``mu`` is stored padded with zeroes to the length of ``lam``.
    """

    lam: Partition
    mu: Partition = ()
    _cells: frozenset[Cell] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        lam = check_partition(self.lam)
        if not lam:
            raise NotAPartition("the outer partition must be non-empty")
        mu = tuple(self.mu)
        while mu and mu[-1] == 0:
            mu = mu[:-1]
        if len(mu) > len(lam):
            raise NotContained(f"{mu} has more parts than {lam}")
        mu = mu + (0,) * (len(lam) - len(mu))
        # containment first, so "31/13" is reported as not contained
        for i, (a, b) in enumerate(zip(lam, mu), start=1):
            if b > a:
                raise NotContained(f"mu_{i} = {b} exceeds lambda_{i} = {a}")
        check_partition(mu)
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "mu", mu)
        r = len(lam)
        object.__setattr__(
            self,
            "_cells",
            frozenset((i + 1, r + j) for i in range(r) for j in range(mu[i] + 1, lam[i] + 1)),
        )

    @property
    def r(self) -> int:
        return len(self.lam)

    @property
    def c(self) -> int:
        return self.lam[0]

    @property
    def n(self) -> int:
        return self.r + self.c

    @property
    def cell_set(self) -> frozenset[Cell]:
        return self._cells

    def __contains__(self, cell) -> bool:
        return cell in self._cells

    def row_span(self, i: int) -> tuple[int, int] | None:
        """First and last column label of row ``i``, or None if it is empty."""
        lo, hi = self.mu[i - 1], self.lam[i - 1]
        if lo >= hi:
            return None
        return self.r + lo + 1, self.r + hi

    def row_cells(self, i: int) -> list[int]:
        span = self.row_span(i)
        return [] if span is None else list(range(span[0], span[1] + 1))

    @cached_property
    def has_empty_lines(self) -> bool:
        rows = {i for i, _ in self._cells}
        cols = {j for _, j in self._cells}
        return len(rows) < self.r or len(cols) < self.c

    def board(self) -> Board:
        return Board(self.r, self.c, self._cells)

    def __str__(self) -> str:
        return format_shape(self)


def format_shape(shape: SkewShape) -> str:
    """Compact ``"54421/31"`` when all parts are single digits, else commas."""
    mu = check_partition(shape.mu)
    compact = all(p <= 9 for p in shape.lam)
    join = "".join if compact else ",".join
    text = join(str(p) for p in shape.lam)
    if mu:
        text += "/" + join(str(p) for p in mu)
    return text


def _parse_parts(text: str) -> tuple[int, ...]:
    text = text.strip()
    if text == "":
        return ()
    if "," in text:
        chunks = text.split(",")
        if not all(re.fullmatch(r"\d+", ch.strip()) for ch in chunks):
            raise ParseError(f"malformed partition {text!r}")
        return tuple(int(ch) for ch in chunks)
    if not re.fullmatch(r"\d+", text):
        raise ParseError(f"malformed partition {text!r}")
    return tuple(int(ch) for ch in text)


def parse_shape(text: str) -> SkewShape:
    """Parse ``"54421/31"``, ``"22"`` or ``"10,9,3/2,1"``."""
    if text.count("/") > 1:
        raise ParseError(f"malformed shape {text!r}")
    outer, _, inner = text.partition("/")
    lam = _parse_parts(outer)
    if not lam:
        raise ParseError(f"empty outer partition in {text!r}")
    mu = _parse_parts(inner)
    return SkewShape(lam, mu)


def cells(shape) -> tuple[Cell, ...]:
    """Cells of a shape or board in row-major order."""
    return tuple(sorted(shape.cell_set))


@dataclass(frozen=True, order=True)
class Corner:
    row: int
    col: int
    kind: str = field(compare=False)


def inner_corners(shape) -> list[Corner]:
    """Cells ``(i, j)`` off the board with ``(i+1, j)`` and ``(i, j+1)`` on it."""
    found = []
    for i in range(1, shape.r + 1):
        for j in range(shape.r + 1, shape.n + 1):
            if (i, j) not in shape and (i + 1, j) in shape and (i, j + 1) in shape:
                found.append(Corner(i, j, "inner"))
    return sorted(found)


def outer_corners(shape) -> list[Corner]:
    """Cells ``(i, j)`` off the board with ``(i, j-1)`` and ``(i-1, j)`` on it."""
    found = []
    for i in range(1, shape.r + 1):
        for j in range(shape.r + 1, shape.n + 1):
            if (i, j) not in shape and (i, j - 1) in shape and (i - 1, j) in shape:
                found.append(Corner(i, j, "outer"))
    return sorted(found)


def is_skew_board(board) -> bool:
    """True iff every NW/SE pair of cells also has its NE and SW companions."""
    cs = board.cell_set
    for i, j in cs:
        for k, l in cs:
            if i < k and j < l and ((k, j) not in cs or (i, l) not in cs):
                return False
    return True


def is_connected_shape(board) -> bool:
    """Connectivity of the row/column incidence graph of the board."""
    vertices = set(range(1, board.r + board.c + 1))
    adj: dict[int, set[int]] = {v: set() for v in vertices}
    for i, j in board.cell_set:
        adj[i].add(j)
        adj[j].add(i)
    start = next(iter(vertices))
    seen = {start}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return seen == vertices


def parse_board(text: str) -> Board:
    """Parse a grid of ``#`` (cell) and ``.`` (hole) characters."""
    lines = [ln.rstrip("\r") for ln in text.strip("\n").split("\n")]
    lines = [ln.strip() for ln in lines]
    if not lines or not lines[0]:
        raise ParseError("empty board")
    width = len(lines[0])
    cs = set()
    for i, line in enumerate(lines, start=1):
        if len(line) != width or set(line) - {"#", "."}:
            raise ParseError(f"malformed board line {i}: {line!r}")
        for j, ch in enumerate(line, start=1):
            if ch == "#":
                cs.add((i, len(lines) + j))
    return Board(len(lines), width, frozenset(cs))


def format_board(board) -> str:
    rows = []
    for i in range(1, board.r + 1):
        rows.append("".join("#" if (i, j) in board else "." for j in range(board.r + 1, board.n + 1)))
    return "\n".join(rows) + "\n"


def _partitions_in_box(rows: int, largest: int, first: int | None = None) -> Iterator[Partition]:
    """Weakly decreasing tuples of length ``rows`` with entries in [0, largest],
    optionally with a prescribed first entry."""
    if rows == 0:
        yield ()
        return
    heads = [first] if first is not None else range(largest, -1, -1)
    for head in heads:
        for tail in _partitions_in_box(rows - 1, head):
            yield (head,) + tail


def skew_shapes(r: int, c: int, *, connected: bool | None = None) -> Iterator[SkewShape]:
    """All skew shapes with exactly ``r`` rows and ``c`` columns and no empty
    row or column, optionally filtered by connectivity."""
    for lam in _partitions_in_box(r, c, first=c):
        if lam[-1] == 0:
            continue
        for mu in _partitions_in_box(r, c):
            if any(m >= l for m, l in zip(mu, lam)):
                continue
            # a column is empty exactly when some mu_i exceeds lam_{i+1}, or mu_r > 0
            if mu[-1] > 0 or any(mu[i] > lam[i + 1] for i in range(r - 1)):
                continue
            shape = SkewShape(lam, mu)
            if connected is not None and is_connected_shape(shape) != connected:
                continue
            yield shape


def all_skew_shapes(max_n: int, *, connected: bool | None = None) -> Iterator[SkewShape]:
    """All shapes with nonempty rows and columns and ``r + c <= max_n``."""
    for n in range(2, max_n + 1):
        for r in range(1, n):
            yield from skew_shapes(r, n - r, connected=connected)
