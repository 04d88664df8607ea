"""Weyl tableaux, Gel'fand patterns and Littlewood fillings.

Symbols are 1-based integers: symbol ``k`` stands for a_k.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from . import _kernels
from .partition import Partition, RankError


class PatternError(ValueError):
    """Malformed triangle or a betweenness violation."""


class TableauError(ValueError):
    pass


@dataclass(frozen=True)
class WeylTableau:
    """Young diagram filled with symbols; ``rows[i]`` lists row ``i`` left to right."""

    shape: Partition
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(s) for s in r) for r in self.rows if len(r))
        object.__setattr__(self, "rows", rows)
        if tuple(len(r) for r in rows) != self.shape.rows:
            raise TableauError(f"row lengths {[len(r) for r in rows]} do not match {self.shape}")
        if not is_semistandard(rows):
            raise TableauError(f"not a Weyl tableau: {rows}")

    def to_json(self) -> dict:
        return {"shape": self.shape.to_json(), "rows": [list(r) for r in self.rows]}

    @classmethod
    def from_json(cls, data: dict) -> "WeylTableau":
        return cls(Partition.from_json(data["shape"]), tuple(tuple(r) for r in data["rows"]))


def is_semistandard(rows: Sequence[Sequence[int]], offsets: Sequence[int] | None = None) -> bool:
    """Rows weakly increase, columns strictly increase, symbols positive.

    With ``offsets`` the rows describe a skew region: row ``i`` starts at
    column ``offsets[i]`` and only cells that exist in both rows are compared.
    """
    if offsets is None:
        offsets = [0] * len(rows)
    for i, row in enumerate(rows):
        if any(s < 1 for s in row):
            return False
        if any(a > b for a, b in zip(row, row[1:])):
            return False
        if i == 0:
            continue
        above, a_off = rows[i - 1], offsets[i - 1]
        for j, s in enumerate(row):
            col = offsets[i] + j
            if a_off <= col < a_off + len(above) and above[col - a_off] >= s:
                return False
    return True


@dataclass(frozen=True)
class GelfandPattern:
    """Triangular array, top row first; row ``t`` (0-based) has ``n - t`` entries."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        n = len(rows)
        if n == 0 or any(len(r) != n - t for t, r in enumerate(rows)):
            raise PatternError(f"malformed triangle: row lengths {[len(r) for r in rows]}")

    @property
    def n(self) -> int:
        return len(self.rows)

    @property
    def top(self) -> Partition:
        return Partition(self.rows[0])

    def level(self, k: int) -> tuple[int, ...]:
        """Row for U(k), i.e. the entries m[1..k][k]."""
        return self.rows[self.n - k]

    def to_json(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    @classmethod
    def from_json(cls, data) -> "GelfandPattern":
        return cls(tuple(tuple(r) for r in data))


def rows_interleave(upper: Sequence[int], lower: Sequence[int]) -> bool:
    """``upper[i] >= lower[i] >= upper[i+1]`` for a row one entry shorter."""
    if len(lower) != len(upper) - 1:
        raise PatternError(f"rows of length {len(upper)} and {len(lower)} are not adjacent")
    return all(upper[i] >= lower[i] >= upper[i + 1] for i in range(len(lower)))


def check_betweenness(g: GelfandPattern) -> bool:
    if any(x < 0 for r in g.rows for x in r):
        return False
    return all(rows_interleave(g.rows[t], g.rows[t + 1]) for t in range(g.n - 1))


def gelfand_from_weyl(w: WeylTableau, n: int) -> GelfandPattern:
    """Level k of the pattern is the shape occupied by symbols 1..k."""
    if len(w.shape) > n:
        raise RankError(f"{w.shape} has more than {n} rows")
    if any(s > n for r in w.rows for s in r):
        raise TableauError(f"symbol exceeds n={n}")
    levels = []
    for k in range(n, 0, -1):
        levels.append(tuple(
            sum(1 for s in w.rows[i] if s <= k) if i < len(w.rows) else 0
            for i in range(k)
        ))
    return GelfandPattern(tuple(levels))


def weyl_from_gelfand(g: GelfandPattern) -> WeylTableau:
    if not check_betweenness(g):
        raise PatternError(f"betweenness violated: {g.to_json()}")
    n = g.n
    rows = []
    for i in range(n):
        row: list[int] = []
        for k in range(i + 1, n + 1):
            prev = g.level(k - 1)[i] if i < k - 1 else 0
            row.extend([k] * (g.level(k)[i] - prev))
        rows.append(tuple(row))
    return WeylTableau(g.top, tuple(rows))


def enumerate_patterns(top: Partition, n: int) -> Iterator[GelfandPattern]:
    """All patterns with the given top row, lexicographic in the flattened rows."""
    first = top.padded(n)

    def below(upper):
        # lexicographic product of the interleaving ranges
        ranges = [range(upper[i + 1], upper[i] + 1) for i in range(len(upper) - 1)]

        def rec(i, acc):
            if i == len(ranges):
                yield tuple(acc)
                return
            for x in ranges[i]:
                acc.append(x)
                yield from rec(i + 1, acc)
                acc.pop()

        return rec(0, [])

    def descend(stack):
        if len(stack[-1]) == 1:
            yield GelfandPattern(tuple(stack))
            return
        for nxt in below(stack[-1]):
            stack.append(nxt)
            yield from descend(stack)
            stack.pop()

    yield from descend([first])


def count_patterns(top: Partition, n: int) -> int:
    """Pattern count via the compiled kernel; equals ``len(list(enumerate_patterns(...)))``."""
    return int(_kernels.count_patterns(np.array(top.padded(n), dtype=np.int64)))


@dataclass(frozen=True)
class LRFilling:
    """Symbols added to ``inner`` to reach ``outer``.

    ``rows[i]`` lists the symbols of the skew part of row ``i`` left to right
    (empty for rows that gain nothing); ``content[k-1]`` is the number of
    symbols ``k``.
    """

    inner: Partition
    outer: Partition
    rows: tuple[tuple[int, ...], ...]

    @property
    def content(self) -> tuple[int, ...]:
        top = max((s for r in self.rows for s in r), default=0)
        return tuple(sum(r.count(k) for r in self.rows) for k in range(1, top + 1))

    def count(self, symbol: int, row: int) -> int:
        """Number of ``symbol`` boxes in ``row`` (both 1-based)."""
        if row > len(self.rows):
            return 0
        return self.rows[row - 1].count(symbol)

    def reading_word(self) -> list[int]:
        """Rows top to bottom, each read right to left."""
        return [s for r in self.rows for s in reversed(r)]

    def is_weyl_valid(self) -> bool:
        return is_semistandard(self.rows, [self.inner.row(i) for i in range(len(self.rows))])

    def to_json(self) -> dict:
        return {"inner": self.inner.to_json(), "outer": self.outer.to_json(),
                "rows": [list(r) for r in self.rows]}

    @classmethod
    def from_counts(cls, inner: Partition, counts) -> "LRFilling":
        """Build from ``counts[k][r]``: boxes of symbol k+1 in row r."""
        counts = np.asarray(counts)
        nsym, nrows = counts.shape
        rows = []
        for r in range(nrows):
            row: list[int] = []
            for k in range(nsym):
                row.extend([k + 1] * int(counts[k, r]))
            rows.append(tuple(row))
        while rows and not rows[-1]:
            rows.pop()
        outer = Partition(tuple(inner.row(r) + len(rows[r]) if r < len(rows) else inner.row(r)
                                for r in range(max(len(rows), len(inner)))))
        return cls(inner, outer, tuple(rows))


def is_lattice_word(f: LRFilling) -> bool:
    """Every prefix of the reading word has #a1 >= #a2 >= ... ."""
    seen: dict[int, int] = {}
    for s in f.reading_word():
        seen[s] = seen.get(s, 0) + 1
        if s > 1 and seen[s] > seen.get(s - 1, 0):
            return False
    return True
