"""Ordinals [n] = {0 < 1 < ... < n} and the monotone maps between them.

A map is stored as its full value table.  Ordinals are plain ``int`` values
(``n`` stands for ``[n]``); :func:`check_ordinal` rejects negatives.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement
from math import comb
from typing import Iterable

from .errors import LengthMismatch, NotMonotone, OutOfRange, SourceTargetMismatch


def check_ordinal(n: int) -> int:
    if isinstance(n, bool) or not isinstance(n, int) or n < 0:
        raise OutOfRange(f"ordinal must be a natural number, got {n!r}")
    return n


@dataclass(frozen=True, order=True)
class MonotoneMap:
    """A nondecreasing map ``[source] -> [target]``.

    Construction validates the table, so every instance satisfies the
    length, range and monotonicity invariants.
    """

    source: int
    target: int
    values: tuple[int, ...]

    def __post_init__(self):
        check_ordinal(self.source)
        check_ordinal(self.target)
        values = tuple(self.values)
        object.__setattr__(self, "values", values)
        if len(values) != self.source + 1:
            raise LengthMismatch(
                f"map from [{self.source}] needs {self.source + 1} values, got {len(values)}"
            )
        for i, v in enumerate(values):
            if type(v) is not int or not 0 <= v <= self.target:
                raise OutOfRange(f"value {v!r} at index {i} outside [0, {self.target}]", index=i)
        for i in range(1, len(values)):
            if values[i - 1] > values[i]:
                raise NotMonotone(f"values decrease at index {i}: {values[i - 1]} > {values[i]}", index=i)

    def __call__(self, i: int) -> int:
        return self.values[i]

    def __iter__(self):
        return iter(self.values)

    def __len__(self):
        return len(self.values)

    def __str__(self):
        return ",".join(map(str, self.values))

    def __repr__(self):
        return f"MonotoneMap([{self.source}]->[{self.target}]: {self})"


def make_map(m: int, n: int, values: Iterable[int]) -> MonotoneMap:
    return MonotoneMap(m, n, tuple(values))


def _trusted(source: int, target: int, values: tuple[int, ...]) -> MonotoneMap:
    # skips validation; only for tables that are monotone and in range by construction
    f = object.__new__(MonotoneMap)
    object.__setattr__(f, "source", source)
    object.__setattr__(f, "target", target)
    object.__setattr__(f, "values", values)
    return f


@lru_cache(maxsize=None)
def identity(n: int) -> MonotoneMap:
    return MonotoneMap(n, n, tuple(range(n + 1)))


def compose(g: MonotoneMap, f: MonotoneMap) -> MonotoneMap:
    """Return ``g . f`` (apply ``f`` first)."""
    if f.target != g.source:
        raise SourceTargetMismatch(
            f"cannot compose [{g.source}]->[{g.target}] after [{f.source}]->[{f.target}]"
        )
    gv = g.values
    return _trusted(f.source, g.target, tuple(gv[i] for i in f.values))


@lru_cache(maxsize=None)
def enumerate_maps(m: int, n: int) -> tuple[MonotoneMap, ...]:
    """All monotone maps ``[m] -> [n]`` in lexicographic order of their tables."""
    check_ordinal(m)
    check_ordinal(n)
    # nondecreasing tuples are exactly the sorted multisets of size m+1
    return tuple(
        MonotoneMap(m, n, values)
        for values in combinations_with_replacement(range(n + 1), m + 1)
    )


def count_maps(m: int, n: int) -> int:
    check_ordinal(m)
    check_ordinal(n)
    return comb(m + n + 1, m + 1)


def constant_map(m: int, n: int, c: int) -> MonotoneMap:
    check_ordinal(m)
    check_ordinal(n)
    if not 0 <= c <= n:
        raise OutOfRange(f"constant {c} outside [0, {n}]")
    return MonotoneMap(m, n, (c,) * (m + 1))


def terminal_map(m: int) -> MonotoneMap:
    return constant_map(m, 0, 0)


def vertex_map(eps: int) -> MonotoneMap:
    """The map ``[0] -> [1]`` picking vertex ``eps``."""
    if eps not in (0, 1):
        raise OutOfRange(f"vertex must be 0 or 1, got {eps!r}")
    return MonotoneMap(0, 1, (eps,))


def face_maps(m: int) -> list[MonotoneMap]:
    """Injections ``[m-1] -> [m]`` skipping one vertex (empty for ``m == 0``)."""
    return [
        MonotoneMap(m - 1, m, tuple(i if i < j else i + 1 for i in range(m)))
        for j in range(m + 1)
    ] if m > 0 else []


def degeneracy_maps(m: int) -> list[MonotoneMap]:
    """Surjections ``[m+1] -> [m]`` repeating one vertex."""
    return [
        MonotoneMap(m + 1, m, tuple(i if i <= j else i - 1 for i in range(m + 2)))
        for j in range(m + 1)
    ]
