"""Grassmann necklaces and the test for coming from a rook matroid.

Elements ``1..n-k`` play the role of rows and ``n-k+1..n`` of columns.  The
statistics ``r_i`` and ``c_i`` of a necklace locate the inner and outer
corners of the prospective shape; :func:`classify` checks the five
conditions, rebuilds the shape from the corners and confirms that its
necklace is the one we started from.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable

from .errors import (
    IncompatibleCorners,
    InternalError,
    NotAPartition,
    NotContained,
    OutOfRange,
    ParseError,
    RookMatroidError,
    RoundTripFailure,
    UndefinedStat,
    WrongSize,
)
from .shapes import SkewShape, inner_corners, outer_corners


@dataclass(frozen=True)
class GrassmannNecklace:
    n: int
    k: int
    terms: tuple[frozenset[int], ...]

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple(frozenset(t) for t in self.terms))
        if len(self.terms) != self.n:
            raise WrongSize(f"expected {self.n} terms, got {len(self.terms)}")
        for i, t in enumerate(self.terms, start=1):
            if len(t) != self.k:
                raise WrongSize(f"I_{i} has {len(t)} elements, expected {self.k}")
            if any(not 1 <= e <= self.n for e in t):
                raise OutOfRange(f"I_{i} = {sorted(t)} leaves [1, {self.n}]")

    def __getitem__(self, i: int) -> frozenset[int]:
        """``I_i`` with the index read cyclically."""
        return self.terms[(i - 1) % self.n]

    @property
    def rows(self) -> int:
        return self.n - self.k

    # statistics --------------------------------------------------------

    def R(self, i: int) -> frozenset[int]:
        return frozenset(e for e in self[i] if e <= self.rows)

    def C(self, i: int) -> frozenset[int]:
        return frozenset(e for e in self[i] if e > self.rows)

    def S(self, i: int) -> frozenset[int]:
        return frozenset(range(self.rows + 1, self.n + 1)) - self.C(i)

    def r(self, i: int) -> int:
        if i >= self.n + 1:
            return 0
        if i == self.rows + 1:
            raise UndefinedStat(f"r_{i} is not defined")
        R = self.R(i)
        if not R:
            raise UndefinedStat(f"r_{i} is undefined: I_{i} has no row element")
        return min(R)

    def c(self, i: int) -> int:
        S = self.S(i)
        if not S:
            raise UndefinedStat(f"c_{i} is undefined: I_{i} contains every column")
        return max(S)

    def pairing(self, i: int) -> list[tuple[int, int]]:
        """``(t_j, s_j)``: rows ascending against missing columns descending."""
        return list(zip(sorted(self.R(i)), sorted(self.S(i), reverse=True)))


def parse_necklace(text: str) -> GrassmannNecklace:
    """Read ``n k`` followed by ``n`` lines ``i: a b c ...``."""
    lines = text.replace("\r\n", "\n").split("\n")
    while lines and lines[-1].strip() == "":
        lines.pop()
    if not lines:
        raise ParseError("empty necklace file")
    head = lines[0].split()
    if len(head) != 2 or not all(re.fullmatch(r"\d+", h) for h in head):
        raise ParseError(f"header should be 'n k', got {lines[0]!r}")
    n, k = int(head[0]), int(head[1])
    if n < 1 or k > n:
        raise ParseError(f"need 1 <= n and k <= n, got n={n} k={k}")
    body = lines[1:]
    if len(body) != n:
        raise ParseError(f"expected {n} term lines, got {len(body)}")
    terms = []
    for expect, line in enumerate(body, start=1):
        m = re.fullmatch(r"\s*(\d+)\s*:\s*((?:\d+\s*)*)", line)
        if not m:
            raise ParseError(f"malformed line {line!r}")
        if int(m.group(1)) != expect:
            raise ParseError(f"line for I_{expect} is labelled {m.group(1)}")
        elems = [int(x) for x in m.group(2).split()]
        if len(set(elems)) != len(elems):
            raise ParseError(f"repeated element in I_{expect}")
        if len(elems) != k:
            raise WrongSize(f"I_{expect} has {len(elems)} elements, expected {k}")
        if any(not 1 <= e <= n for e in elems):
            raise OutOfRange(f"I_{expect} = {elems} leaves [1, {n}]")
        terms.append(frozenset(elems))
    return GrassmannNecklace(n, k, tuple(terms))


def format_necklace(gn: GrassmannNecklace) -> str:
    lines = [f"{gn.n} {gn.k}"]
    for i, t in enumerate(gn.terms, start=1):
        lines.append(f"{i}: " + " ".join(str(e) for e in sorted(t)) if t else f"{i}:")
    return "\n".join(lines) + "\n"


def from_terms(terms: Iterable[Iterable[int]]) -> GrassmannNecklace:
    terms = tuple(frozenset(t) for t in terms)
    return GrassmannNecklace(len(terms), len(terms[0]) if terms else 0, terms)


def validate_necklace(gn: GrassmannNecklace) -> int | None:
    """First index ``i`` where the shift axioms fail, or None.

    Where ``i`` is in ``I_i`` the next term must be ``I_i - {i} + {j}`` for
    some ``j``, possibly ``i`` itself; otherwise the next term repeats ``I_i``.
    """
    for i in range(1, gn.n + 1):
        cur, nxt = gn[i], gn[i + 1]
        if i in cur:
            if not (cur - {i}) <= nxt:
                return i
        elif nxt != cur:
            return i
    return None


def loopless_coloopless(gn: GrassmannNecklace) -> tuple[bool, bool]:
    return _first_loop(gn) is None, _first_coloop(gn) is None


def _first_loop(gn):
    return next((i for i in range(1, gn.n + 1) if i not in gn[i]), None)


def _first_coloop(gn):
    common = frozenset.intersection(*gn.terms) if gn.terms else frozenset()
    return min(common) if common else None


@dataclass(frozen=True)
class CornerSets:
    inner: tuple[tuple[int, int], ...]
    outer: tuple[tuple[int, int], ...]


def corner_sets(gn: GrassmannNecklace) -> CornerSets:
    """``IC`` and ``OC`` of the necklace, each sorted by row.

    ``IC`` runs over ``j`` up to ``n`` (using ``r_{n+1} = 0``) so that an
    inner corner in column ``n-1`` is seen.
    """
    rows = gn.rows
    oc = [(i, gn.c(i) + 1) for i in range(2, rows + 1) if gn.c(i) < gn.c(i - 1)]
    ic = []
    for j in range(rows + 2, gn.n + 1):
        rj = gn.r(j)
        if rj > gn.r(j + 1) and rj != 1:
            ic.append((rj - 1, j - 1))
    return CornerSets(tuple(sorted(ic)), tuple(sorted(oc)))


def reconstruct_shape(ic, oc, n: int, k: int) -> SkewShape:
    """The shape on ``n-k`` rows and ``k`` columns with exactly these corners."""
    r, c = n - k, k
    if r < 1 or c < 1:
        raise IncompatibleCorners(f"no board with {r} rows and {c} columns")
    inner = dict()
    for a, col in ic:
        if not (1 <= a <= r - 1 and r + 1 <= col <= n - 1) or a in inner:
            raise IncompatibleCorners(f"({a},{col}) cannot be an inner corner")
        inner[a] = col
    outer = dict()
    for i, col in oc:
        if not (2 <= i <= r and r + 2 <= col <= n) or i in outer:
            raise IncompatibleCorners(f"({i},{col}) cannot be an outer corner")
        outer[i] = col
    mu = [0] * r
    for a in range(r - 1, 0, -1):
        mu[a - 1] = inner[a] - r if a in inner else mu[a]
    lam = [c] * r
    for i in range(2, r + 1):
        lam[i - 1] = outer[i] - r - 1 if i in outer else lam[i - 2]
    try:
        shape = SkewShape(tuple(lam), tuple(mu))
    except (NotAPartition, NotContained) as exc:
        raise IncompatibleCorners(str(exc)) from None
    if shape.r != r or shape.c != c or shape.has_empty_lines:
        raise IncompatibleCorners(f"corners give {shape}, not a full {r}x{c} board")
    got_ic = {(x.row, x.col) for x in inner_corners(shape)}
    got_oc = {(x.row, x.col) for x in outer_corners(shape)}
    if got_ic != set(ic) or got_oc != set(oc):
        raise IncompatibleCorners(f"corners are not those of {shape}")
    return shape


# classification -------------------------------------------------------------


@dataclass(frozen=True)
class Accept:
    shape: SkewShape
    corners: CornerSets

    def __str__(self) -> str:
        return f"ROOK {self.shape}"


@dataclass(frozen=True)
class Reject:
    condition: str
    index: int | None = None
    cell: tuple[int, int] | None = None
    detail: str = ""

    @property
    def witness(self) -> str:
        parts = []
        if self.index is not None:
            parts.append(f"I{self.index}" if self.condition not in ("NotLoopless", "NotColoopless") else f"e{self.index}")
        if self.cell is not None:
            parts.append(f"({self.cell[0]},{self.cell[1]})")
        return ":".join(parts) or "-"

    def __str__(self) -> str:
        return f"NOT-ROOK condition={self.condition} witness={self.witness}"


def _conditions(gn: GrassmannNecklace) -> Reject | None:
    n, k, rows = gn.n, gn.k, gn.rows
    if gn[rows + 1] != frozenset(range(rows + 1, n + 1)):
        return Reject("1", rows + 1, detail="I_{n-k+1} is not the set of columns")
    for j in range(rows + 2, n + 1):
        rj = gn.r(j)
        if gn.c(rj) < j - 1:
            return Reject("2", j, detail=f"c_{rj} = {gn.c(rj)} < {j - 1}")
    for i in range(1, rows + 1):
        ci = gn.c(i)
        if gn.r(ci + 2) - 1 > i:
            return Reject("3", i, detail=f"r_{ci + 2} - 1 = {gn.r(ci + 2) - 1} > {i}")
    if any(len(gn.R(i)) != len(gn.S(i)) for i in range(1, n + 1)):
        return Reject("NotNecklace", detail="rows and missing columns do not pair up")
    corners = corner_sets(gn)
    ic, oc = set(corners.inner), set(corners.outer)
    for i in range(rows + 2, n + 1):
        p = gn.pairing(i)
        for (t0, _), (t1, s1) in zip(p, p[1:]):
            if t1 - t0 > 1 and (t1 - 1, s1) not in ic:
                return Reject("4", i, (t1 - 1, s1), detail="required inner corner is missing")
    for i in range(1, rows + 1):
        p = gn.pairing(i)
        for (_, s0), (t1, s1) in zip(p, p[1:]):
            if s0 - s1 > 1 and (t1, s1 + 1) not in oc:
                return Reject("5", i, (t1, s1 + 1), detail="required outer corner is missing")
    return None


def classify(gn: GrassmannNecklace) -> Accept | Reject:
    """Decide whether ``gn`` is the necklace of a rook matroid.

    Order of checks: loops, coloops, conditions 1 to 5, the necklace axioms,
    then reconstruction and the round trip through the rebuilt shape.  Some
    valid necklaces pass all five conditions yet fail the round trip, for
    instance ``({1,2}, {2,4}, {3,4}, {4,5}, {1,5})``; they are rejected with
    condition ``RoundTrip``.
    """
    from .rook import grassmann_necklace

    loop = _first_loop(gn)
    if loop is not None:
        return Reject("NotLoopless", loop)
    coloop = _first_coloop(gn)
    if coloop is not None:
        return Reject("NotColoopless", coloop)
    bad = validate_necklace(gn)
    try:
        verdict = _conditions(gn)
    except UndefinedStat as exc:
        if bad is not None:
            return Reject("NotNecklace", bad)
        raise InternalError(f"statistic undefined on a valid loopless, coloopless necklace: {exc}") from None
    if verdict is not None:
        return verdict
    if bad is not None:
        return Reject("NotNecklace", bad)
    corners = corner_sets(gn)
    try:
        shape = reconstruct_shape(corners.inner, corners.outer, gn.n, gn.k)
    except IncompatibleCorners as exc:
        raise RoundTripFailure(f"conditions hold but the corners fit no shape: {exc}") from None
    rebuilt = grassmann_necklace(shape)
    if rebuilt != gn.terms:
        # the five conditions do not pin the necklace down on their own, so a
        # mismatch here is an ordinary rejection
        first = next(i for i in range(1, gn.n + 1) if rebuilt[i - 1] != gn[i])
        return Reject("RoundTrip", first, detail=f"{shape} has I_{first} = {sorted(rebuilt[first - 1])}")
    return Accept(shape, corners)


def necklace_of_shape(shape) -> GrassmannNecklace:
    from .rook import grassmann_necklace

    return GrassmannNecklace(shape.n, shape.c, grassmann_necklace(shape))


__all__ = [
    "Accept",
    "CornerSets",
    "GrassmannNecklace",
    "Reject",
    "RookMatroidError",
    "classify",
    "corner_sets",
    "format_necklace",
    "from_terms",
    "loopless_coloopless",
    "necklace_of_shape",
    "parse_necklace",
    "reconstruct_shape",
    "validate_necklace",
]
