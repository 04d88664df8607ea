"""Partitions, SU(n) irrep labels and dimensions."""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator

# Dimensions are exact Python integers but are held to the signed 128-bit range.
INT128_MAX = 2**127 - 1


class PartitionError(ValueError):
    """Base class for malformed partition input."""


class PartitionSyntaxError(PartitionError):
    pass


class PartitionOrderError(PartitionError):
    pass


class RankError(ValueError):
    """A shape does not fit the requested rank (too many rows, bad n)."""


class DimensionOverflow(OverflowError):
    pass


@dataclass(frozen=True, order=True)
class Partition:
    """Weakly decreasing nonnegative rows with trailing zeros stripped.

    ``Partition(3, 1, 0) == Partition(3, 1)``; use :meth:`padded` for a
    fixed-length view.
    """

    rows: tuple[int, ...]

    def __init__(self, *rows: int):
        if len(rows) == 1 and hasattr(rows[0], "__iter__"):
            rows = tuple(rows[0])
        vals = tuple(int(r) for r in rows)
        if any(r < 0 for r in vals):
            raise PartitionOrderError(f"negative row in {list(vals)}")
        if any(a < b for a, b in zip(vals, vals[1:])):
            raise PartitionOrderError(f"rows must weakly decrease: {list(vals)}")
        while vals and vals[-1] == 0:
            vals = vals[:-1]
        object.__setattr__(self, "rows", vals)

    def __len__(self) -> int:
        return len(self.rows)

    def __iter__(self) -> Iterator[int]:
        return iter(self.rows)

    def __getitem__(self, i):
        return self.rows[i]

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self.rows)) + "]"

    def __repr__(self) -> str:
        return f"Partition{self.rows!r}" if len(self.rows) != 1 else f"Partition({self.rows[0]})"

    @property
    def size(self) -> int:
        return sum(self.rows)

    def row(self, i: int) -> int:
        """Row ``i`` (0-based), zero past the last nonzero row."""
        return self.rows[i] if i < len(self.rows) else 0

    def padded(self, n: int) -> tuple[int, ...]:
        if len(self.rows) > n:
            raise RankError(f"{self} has more than {n} rows")
        return self.rows + (0,) * (n - len(self.rows))

    def to_json(self) -> list[int]:
        return list(self.rows)

    @classmethod
    def from_json(cls, data: Iterable[int]) -> "Partition":
        return cls(tuple(data))


_BODY = re.compile(r"^\s*\d+\s*(,\s*\d+\s*)*$")


def parse_partition(text: str) -> Partition:
    """Parse ``[a,b,c]`` or ``a,b,c``; ``[]`` and ``[0]`` give the empty partition."""
    s = text.strip()
    if s.startswith("[") or s.endswith("]"):
        if not (s.startswith("[") and s.endswith("]")):
            raise PartitionSyntaxError(f"unbalanced brackets in {text!r}")
        s = s[1:-1]
    if not s.strip():
        if text.strip() in ("[]",):
            return Partition()
        raise PartitionSyntaxError(f"empty partition text {text!r}")
    if not _BODY.match(s):
        raise PartitionSyntaxError(f"cannot parse partition {text!r}")
    return Partition(tuple(int(tok) for tok in s.split(",")))


def _check_rank(p: Partition, n: int) -> None:
    if n < 1:
        raise RankError(f"rank must be positive, got {n}")
    if len(p) > n:
        raise RankError(f"{p} has {len(p)} rows, more than n={n}")


def reduce_sun(p: Partition, n: int) -> Partition:
    """Strip full columns of height ``n``: subtract the n-th row from every row."""
    _check_rank(p, n)
    last = p.row(n - 1)
    return Partition(tuple(r - last for r in p.padded(n)))


def dimension(p: Partition, n: int) -> int:
    """Dimension of the U(n) irrep ``p`` by the hook-content formula."""
    _check_rank(p, n)
    rows = p.rows
    cols = [sum(1 for r in rows if r > j) for j in range(p.row(0))]
    num = 1
    den = 1
    for i, r in enumerate(rows):
        for j in range(r):
            num *= n + j - i
            den *= (r - j) + (cols[j] - i) - 1
    dim, rest = divmod(num, den)
    assert rest == 0
    if dim > INT128_MAX:
        raise DimensionOverflow(f"dim{p} for U({n}) exceeds the 128-bit range")
    return dim


@dataclass(frozen=True)
class Su3Dynkin:
    """SU(3) label (lam, mu); the two-row diagram is [lam+mu, mu]."""

    lam: int
    mu: int

    def __post_init__(self):
        if self.lam < 0 or self.mu < 0:
            raise ValueError(f"Dynkin labels must be nonnegative: ({self.lam},{self.mu})")

    def __str__(self) -> str:
        return f"({self.lam},{self.mu})"


def dynkin_to_partition(d: Su3Dynkin) -> Partition:
    return Partition(d.lam + d.mu, d.mu)


def partition_to_dynkin(p: Partition) -> Su3Dynkin:
    if len(p) > 2:
        raise RankError(f"{p} has more than two rows; reduce it first")
    return Su3Dynkin(p.row(0) - p.row(1), p.row(1))


def partitions(size: int, max_rows: int, max_part: int | None = None) -> Iterator[Partition]:
    """Partitions of ``size`` with at most ``max_rows`` rows, lexicographically descending."""
    if max_part is None:
        max_part = size

    def rec(left, rows_left, cap):
        if left == 0:
            yield ()
            return
        if rows_left == 0:
            return
        for first in range(min(left, cap), 0, -1):
            for tail in rec(left - first, rows_left - 1, first):
                yield (first,) + tail

    for rows in rec(size, max_rows, max_part):
        yield Partition(rows)
