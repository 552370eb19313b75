"""Finite matroids given by an explicit family of bases.

This is the brute-force ground truth the rest of the package is checked
against, so everything here is computed straight from the definitions.
Subsets are handled internally as integer bitmasks (bit ``e`` for element
``e``); the public surface speaks in frozensets of element labels.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from functools import cached_property
from itertools import combinations
from typing import Iterable

from .errors import EmptyFamily, UnequalSizes


def to_mask(s: Iterable[int]) -> int:
    m = 0
    for e in s:
        m |= 1 << e
    return m


def from_mask(m: int) -> frozenset[int]:
    out = []
    e = 0
    while m:
        if m & 1:
            out.append(e)
        m >>= 1
        e += 1
    return frozenset(out)


def colex_key(s: Iterable[int]) -> tuple[int, ...]:
    return tuple(sorted(s, reverse=True))


@dataclass(frozen=True)
class CounterExample:
    """Bases ``b1``, ``b2`` and ``a`` in ``b1 - b2`` with no exchange partner."""

    b1: frozenset[int]
    b2: frozenset[int]
    a: int


def verify_basis_exchange(family: Iterable[Iterable[int]]) -> CounterExample | None:
    """None when the family satisfies basis exchange, else the first failure.

    Bases are scanned in colex order and ``a`` in increasing order.
    """
    fam = {frozenset(b) for b in family}
    if not fam:
        raise EmptyFamily("a matroid needs at least one basis")
    if len({len(b) for b in fam}) != 1:
        raise UnequalSizes("bases must all have the same size")
    ordered = sorted(fam, key=colex_key)
    for b1 in ordered:
        for b2 in ordered:
            if b1 == b2:
                continue
            for a in sorted(b1 - b2):
                rest = b1 - {a}
                if not any(rest | {b} in fam for b in b2 - b1):
                    return CounterExample(b1, b2, a)
    return None


@dataclass(frozen=True)
class Matroid:
    ground: frozenset[int]
    bases: frozenset[frozenset[int]]
    verified: bool = field(default=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "ground", frozenset(self.ground))
        object.__setattr__(self, "bases", frozenset(frozenset(b) for b in self.bases))
        if not self.bases:
            raise EmptyFamily("a matroid needs at least one basis")
        if len({len(b) for b in self.bases}) != 1:
            raise UnequalSizes("bases must all have the same size")
        stray = set().union(*self.bases) - self.ground
        if stray:
            raise ValueError(f"bases use elements {sorted(stray)} outside the ground set")

    @classmethod
    def checked(cls, ground: Iterable[int], bases: Iterable[Iterable[int]]) -> "Matroid":
        """Build and verify; raises ValueError carrying the counterexample."""
        bases = [frozenset(b) for b in bases]
        ce = verify_basis_exchange(bases)
        if ce is not None:
            raise ValueError(f"not a matroid: {ce}")
        return cls(frozenset(ground), frozenset(bases), verified=True)

    def verify(self) -> "Matroid":
        if self.verified:
            return self
        ce = verify_basis_exchange(self.bases)
        if ce is not None:
            raise ValueError(f"not a matroid: {ce}")
        return replace(self, verified=True)

    @property
    def n(self) -> int:
        return len(self.ground)

    @cached_property
    def k(self) -> int:
        return len(next(iter(self.bases)))

    @cached_property
    def _masks(self) -> tuple[int, ...]:
        return tuple(to_mask(b) for b in self.bases)

    @cached_property
    def _rank_cache(self) -> dict[int, int]:
        return {}

    def rank_mask(self, mask: int) -> int:
        cache = self._rank_cache
        hit = cache.get(mask)
        if hit is None:
            hit = max((b & mask).bit_count() for b in self._masks)
            cache[mask] = hit
        return hit

    def rank(self, s: Iterable[int]) -> int:
        return self.rank_mask(to_mask(s))

    def is_independent(self, s: Iterable[int]) -> bool:
        s = frozenset(s)
        return self.rank(s) == len(s)

    def is_basis(self, s: Iterable[int]) -> bool:
        return frozenset(s) in self.bases


def rank(m: Matroid, s: Iterable[int]) -> int:
    """max |B & s| over the bases of ``m``."""
    return m.rank(s)


def loops(m: Matroid) -> frozenset[int]:
    used = frozenset().union(*m.bases)
    return m.ground - used


def coloops(m: Matroid) -> frozenset[int]:
    common = frozenset.intersection(*m.bases)
    return frozenset(common)


def delete(m: Matroid, s: Iterable[int]) -> Matroid:
    """``m \\ s``: bases are the ``B - s`` of least overlap with ``s``."""
    s = frozenset(s)
    low = min(len(b & s) for b in m.bases)
    bases = {b - s for b in m.bases if len(b & s) == low}
    return Matroid(m.ground - s, frozenset(bases), verified=m.verified)


def contract(m: Matroid, s: Iterable[int]) -> Matroid:
    """``m / s``: bases are the ``B - s`` of greatest overlap with ``s``."""
    s = frozenset(s)
    high = max(len(b & s) for b in m.bases)
    bases = {b - s for b in m.bases if len(b & s) == high}
    return Matroid(m.ground - s, frozenset(bases), verified=m.verified)


def restrict(m: Matroid, s: Iterable[int]) -> Matroid:
    return delete(m, m.ground - frozenset(s))


def restrict_cyclic(m: Matroid, interval) -> Matroid:
    """Restriction to a cyclic interval; elements keep their labels."""
    return restrict(m, interval.members())


def relabel(m: Matroid) -> tuple[Matroid, dict[int, int]]:
    """Order-preserving compaction onto ``1..n`` with the map used."""
    mapping = {e: i for i, e in enumerate(sorted(m.ground), start=1)}
    bases = frozenset(frozenset(mapping[e] for e in b) for b in m.bases)
    return Matroid(frozenset(mapping.values()), bases, verified=m.verified), mapping


def components(m: Matroid) -> list[frozenset[int]]:
    """Connected components, via the basis exchange graph.

    Two elements share a circuit exactly when swapping one for the other
    turns some basis into another basis.
    """
    parent = {e: e for e in m.ground}

    def find(e):
        while parent[e] != e:
            parent[e] = parent[parent[e]]
            e = parent[e]
        return e

    fam = m.bases
    for b in fam:
        outside = m.ground - b
        for e in b:
            rest = b - {e}
            for f in outside:
                if find(e) != find(f) and rest | {f} in fam:
                    parent[find(e)] = find(f)
    groups: dict[int, set[int]] = {}
    for e in m.ground:
        groups.setdefault(find(e), set()).add(e)
    return sorted((frozenset(g) for g in groups.values()), key=lambda g: min(g))


def is_separator(m: Matroid, t: Iterable[int]) -> bool:
    t = frozenset(t)
    return m.rank(t) + m.rank(m.ground - t) == m.k


def separators(m: Matroid) -> list[frozenset[int]]:
    """Minimal nonempty separators, found by scanning every subset."""
    elems = sorted(m.ground)
    seps = []
    for size in range(1, len(elems) + 1):
        for t in combinations(elems, size):
            t = frozenset(t)
            if any(s <= t for s in seps):
                continue
            if is_separator(m, t):
                seps.append(t)
    return seps


def is_connected(m: Matroid) -> bool:
    return len(components(m)) <= 1
