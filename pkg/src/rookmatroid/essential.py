"""Cyclic intervals, ranked essential sets and the base polytope of a rook matroid.

The essential family is computed straight from the rank function by the local
rank conditions on cyclic neighbours; for connected shapes it is compared
with the family read off from the corners of the shape.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .errors import DisconnectedShape, ParseError
from .matroid import Matroid, to_mask
from .shapes import SkewShape, inner_corners, is_connected_shape, outer_corners


@dataclass(frozen=True, order=True)
class CyclicInterval:
    """``[a, b]`` inside ``1..n``, wrapping past ``n`` when ``a > b``.

    The whole ground set is never written as an interval; use :class:`Full`.
    """

    n: int
    a: int
    b: int

    def __post_init__(self):
        if not (1 <= self.a <= self.n and 1 <= self.b <= self.n):
            raise ValueError(f"[{self.a}, {self.b}] leaves [1, {self.n}]")
        if len(self) == self.n:
            raise ValueError(f"[{self.a}, {self.b}] covers everything; use Full({self.n})")

    is_full = False

    def __len__(self) -> int:
        return (self.b - self.a) % self.n + 1

    def members(self) -> tuple[int, ...]:
        return tuple((self.a - 1 + t) % self.n + 1 for t in range(len(self)))

    def __str__(self) -> str:
        return f"[{self.a},{self.b}]"


@dataclass(frozen=True, order=True)
class Full:
    n: int

    is_full = True

    def __len__(self) -> int:
        return self.n

    def members(self) -> tuple[int, ...]:
        return tuple(range(1, self.n + 1))

    def __str__(self) -> str:
        return "FULL"


def interval(n: int, a: int, b: int):
    """``[a, b]``, or :class:`Full` when it wraps all the way round."""
    if (b - a) % n + 1 == n:
        return Full(n)
    return CyclicInterval(n, a, b)


def interval_members(iv) -> tuple[int, ...]:
    return iv.members()


@dataclass(frozen=True)
class RankedEssentialSet:
    rank: int
    interval: object
    connected: bool = False

    @property
    def pair(self) -> tuple[int, object]:
        return self.rank, self.interval

    def __str__(self) -> str:
        return f"({self.rank},{self.interval})"


def _grow(iv, side: int):
    """Extend ``iv`` by one element on the left (-1) or right (+1)."""
    n = iv.n
    if side < 0:
        return interval(n, (iv.a - 2) % n + 1, iv.b)
    return interval(n, iv.a, iv.b % n + 1)


def _shrink(iv, side: int):
    n = iv.n
    if side < 0:
        return CyclicInterval(n, iv.a % n + 1, iv.b)
    return CyclicInterval(n, iv.a, (iv.b - 2) % n + 1)


def essential_family(m: Matroid) -> list[RankedEssentialSet]:
    """Every ranked essential set of ``m``, ``(k, FULL)`` last.

    ``m`` should be a matroid on ``1..n``; each member carries its
    connectivity flag.
    """
    n = max(m.ground)
    rk = lambda iv: m.rank_mask(to_mask(iv.members()))
    found = []
    for a in range(1, n + 1):
        for length in range(1, n):
            iv = CyclicInterval(n, a, (a + length - 2) % n + 1)
            r = rk(iv)
            if rk(_grow(iv, -1)) != r + 1 or rk(_grow(iv, 1)) != r + 1:
                continue
            if length == 1:
                if r != 0:
                    continue
            elif rk(_shrink(iv, -1)) != r or rk(_shrink(iv, 1)) != r:
                continue
            found.append((r, iv))
    found.sort(key=lambda p: (p[1].a, len(p[1])))
    found.append((m.k, Full(n)))
    family = [RankedEssentialSet(r, iv) for r, iv in found]
    return [RankedEssentialSet(e.rank, e.interval, is_connected_essential(family, e)) for e in family]


def is_connected_essential(family: Iterable[RankedEssentialSet], member: RankedEssentialSet) -> bool:
    """No pairwise-disjoint members inside ``member`` other than itself account
    for its rank, counting every uncovered element as contributing one."""
    target = to_mask(member.interval.members())
    size = len(member.interval)
    parts = []
    for e in family:
        if e.pair == member.pair:
            continue
        mask = to_mask(e.interval.members())
        if mask & ~target == 0:
            parts.append((mask, len(e.interval), e.rank))

    def search(start: int, used: int, covered: int, ranks: int) -> bool:
        if used and ranks + size - covered == member.rank:
            return True
        for idx in range(start, len(parts)):
            mask, length, rank = parts[idx]
            if mask & used == 0 and search(idx + 1, used | mask, covered + length, ranks + rank):
                return True
        return False

    return not search(0, 0, 0, 0)


def corner_essential_sets(shape: SkewShape) -> list[RankedEssentialSet]:
    """Connected essential sets read from the corners: inner ones first."""
    if not is_connected_shape(shape):
        raise DisconnectedShape(f"{shape} is not connected")
    r, c, n = shape.r, shape.c, shape.n
    out = [RankedEssentialSet(r + c - j, interval(n, j + 1, i), True) for i, j in _pts(inner_corners(shape))]
    out += [RankedEssentialSet(l - 1 - r, interval(n, k, l - 1), True) for k, l in _pts(outer_corners(shape))]
    return out


def _pts(corners):
    return [(cr.row, cr.col) for cr in corners]


# polytope -------------------------------------------------------------------


@dataclass(frozen=True)
class HRep:
    """``a . x == b`` for the first row, ``a . x <= b`` for the others."""

    name: str
    n: int
    rows: tuple[tuple[int, tuple[int, ...]], ...]
    labels: tuple[str, ...] = ()

    def without(self, index: int) -> "HRep":
        rows = self.rows[:index] + self.rows[index + 1:]
        labels = self.labels[:index] + self.labels[index + 1:] if self.labels else ()
        return HRep(self.name, self.n, rows, labels)

    def satisfied_by(self, x) -> bool:
        (b0, a0), rest = self.rows[0], self.rows[1:]
        if sum(ai * xi for ai, xi in zip(a0, x)) != b0:
            return False
        return all(sum(ai * xi for ai, xi in zip(a, x)) <= b for b, a in rest)


def _indicator(n: int, members: Iterable[int]) -> tuple[int, ...]:
    s = set(members)
    return tuple(1 if e in s else 0 for e in range(1, n + 1))


def polytope_hrep(shape: SkewShape) -> HRep:
    """Equality, one row per corner, then the unit-cube bounds."""
    n, c = shape.n, shape.c
    rows = [(c, (1,) * n)]
    labels = ["sum"]
    for ess in corner_essential_sets(shape):
        rows.append((ess.rank, _indicator(n, ess.interval.members())))
        labels.append(f"corner {ess.interval}")
    for e in range(1, n + 1):
        rows.append((0, tuple(-1 if f == e else 0 for f in range(1, n + 1))))
        labels.append(f"x{e}>=0")
    for e in range(1, n + 1):
        rows.append((1, _indicator(n, [e])))
        labels.append(f"x{e}<=1")
    return HRep(str(shape), n, tuple(rows), tuple(labels))


def format_ine(h: HRep) -> str:
    lines = [h.name, "H-representation", "linearity 1 1", "begin", f"{len(h.rows)} {h.n + 1} rational"]
    for b, a in h.rows:
        lines.append(" ".join([str(b)] + [str(-v) for v in a]))
    lines.append("end")
    return "\n".join(lines) + "\n"


def parse_ine(text: str) -> HRep:
    lines = [ln.strip() for ln in text.split("\n")]
    lines = [ln for ln in lines if ln]
    try:
        name = lines[0]
        begin = lines.index("begin")
        end = lines.index("end")
        if "H-representation" not in lines[1:begin] or "linearity 1 1" not in lines[1:begin]:
            raise ParseError("expected an H-representation with one linearity")
        count, width, kind = lines[begin + 1].split()
        count, width = int(count), int(width)
        body = lines[begin + 2:end]
        if kind != "rational" or len(body) != count:
            raise ParseError("row count does not match the header")
        rows = []
        for ln in body:
            vals = [int(v) for v in ln.split()]
            if len(vals) != width:
                raise ParseError(f"row {ln!r} should have {width} entries")
            rows.append((vals[0], tuple(-v for v in vals[1:])))
    except (IndexError, ValueError) as exc:
        if isinstance(exc, ParseError):
            raise
        raise ParseError(f"malformed ine file: {exc}") from None
    return HRep(name, width - 1, tuple(rows))


def _term(coef: int, e: int) -> str:
    if coef == 1:
        return f"x{e}"
    if coef == -1:
        return f"-x{e}"
    return f"{coef}*x{e}"


def format_plain(h: HRep) -> str:
    lines = [h.name]
    for idx, (b, a) in enumerate(h.rows):
        terms = [_term(v, e) for e, v in enumerate(a, start=1) if v]
        lhs = " + ".join(terms).replace("+ -", "- ") or "0"
        lines.append(f"{lhs} {'=' if idx == 0 else '<='} {b}")
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class Witness:
    point: tuple[int, ...]
    basis: bool  # True: a basis violates the rows; False: a non-basis satisfies them


def check_hrep(shape: SkewShape, h: HRep, bases=None) -> Witness | None:
    """Compare the 0/1 points with coordinate sum ``c`` cut out by ``h`` against
    the basis indicators; the first disagreement is returned."""
    n, c = shape.n, shape.c
    if bases is None:
        from .rook import build

        bases = build(shape).bases
    for combo in combinations(range(1, n + 1), c):
        x = _indicator(n, combo)
        is_basis = frozenset(combo) in bases
        if h.satisfied_by(x) != is_basis:
            return Witness(x, is_basis)
    return None
