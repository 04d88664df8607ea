"""Special Gel'fand patterns of the complementary group U(2n-2).

A coupled state of [lam] x [mu] -> [nu] is the U(2n-2) pattern whose rows,
from U(2n-2) down to U(n-1), are [nu] with the symbols a_{n-1}, ..., a_1
removed one species at a time.  Rows below U(n-1) carry labels that are left
unconstrained (``None``).
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Optional, Sequence

from .closed_form import (
    EtaLabels, Su4Bounds, eta_from_filling, su3_bounds, su4_bounds,
    UnsupportedRankError,
)
from .lr import lr_fillings
from .partition import Partition, RankError, Su3Dynkin, partition_to_dynkin
from .tableau import LRFilling, rows_interleave

Row = Optional[tuple[int, ...]]


class EtaRangeError(ValueError):
    pass


class BetweennessError(ValueError):
    """A constructed pattern breaks betweenness although its labels are in range."""


@dataclass(frozen=True)
class ComplementaryPattern:
    group_size: int
    rows: tuple[Row, ...]
    eta: EtaLabels = ()

    def __post_init__(self):
        if len(self.rows) != self.group_size:
            raise ValueError(f"expected {self.group_size} levels, got {len(self.rows)}")
        for t, r in enumerate(self.rows):
            if r is not None and len(r) != self.group_size - t:
                raise ValueError(f"level U({self.group_size - t}) has {len(r)} entries")

    def is_valid(self) -> bool:
        """Betweenness on every pair of adjacent specified levels."""
        for upper, lower in zip(self.rows, self.rows[1:]):
            if upper is None or lower is None:
                continue
            if any(x < 0 for x in lower) or not rows_interleave(upper, lower):
                return False
        return True

    def to_json(self) -> dict:
        return {"group": f"U({self.group_size})", "eta": list(self.eta),
                "rows": [None if r is None else list(r) for r in self.rows]}

    def format(self) -> str:
        width = self.group_size
        lines = []
        for t, r in enumerate(self.rows):
            body = "rho (unconstrained)" if r is None else " ".join(f"{x:>2}" for x in r)
            lines.append(f"U({width - t}):".ljust(7) + " " * t + body)
        return "\n".join(lines)


def _pad(vals: Sequence[int], size: int) -> tuple[int, ...]:
    return tuple(vals) + (0,) * (size - len(vals))


def _assemble(n: int, specified: list[tuple[int, ...]], eta: EtaLabels) -> ComplementaryPattern:
    size = 2 * n - 2
    rows: list[Row] = [_pad(r, size - t) for t, r in enumerate(specified)]
    rows += [None] * (size - len(rows))
    return ComplementaryPattern(size, tuple(rows), tuple(eta))


def su3_pattern_rows(first: Su3Dynkin, second: Su3Dynkin, m: Partition,
                     eta: int) -> ComplementaryPattern:
    """U(4) pattern for label ``eta`` with no range or betweenness check."""
    m1, m2, m3 = m.padded(3)
    mu2 = second.mu
    return _assemble(3, [(m1, m2, m3, 0),
                         (m1, m2 - eta, m3 - mu2 + eta),
                         (first.lam + first.mu, first.mu)], (eta,))


def coupled_pattern_su3(first: Su3Dynkin, second: Su3Dynkin, m: Partition,
                        eta: int) -> ComplementaryPattern:
    b = su3_bounds(first, second, m)
    if not b.eta_min <= eta <= b.eta_max:
        raise EtaRangeError(f"eta={eta} outside [{b.eta_min}, {b.eta_max}]")
    pat = su3_pattern_rows(first, second, m, eta)
    if not pat.is_valid():
        raise BetweennessError(f"pattern for eta={eta} violates betweenness: {pat.rows}")
    return pat


def su4_pattern_rows(lam: Partition, mu: Partition, nu: Partition,
                     eta: EtaLabels) -> ComplementaryPattern:
    """U(6) pattern for ``(eta1, eta2, eta3)`` with no range or betweenness check."""
    n1, n2, n3, n4 = nu.padded(4)
    l1, l2, l3 = lam.padded(3)
    _, u2, u3 = mu.padded(3)
    e1, e2, e3 = eta
    return _assemble(4, [(n1, n2, n3, n4),
                         (n1, n2, n3 - e2, n4 - u3 + e2, 0),
                         (n1, n2 - e1, n3 - u2 + e1 + e3 - e2, n4 - u3 + e2 - e3),
                         (l1, l2, l3)], tuple(eta))


def coupled_pattern_su4(lam: Partition, mu: Partition, nu: Partition,
                        eta: EtaLabels) -> ComplementaryPattern:
    if tuple(eta) not in set(su4_bounds(lam, mu, nu).labels()):
        raise EtaRangeError(f"eta={tuple(eta)} outside the nested bounds for {lam}x{mu}->{nu}")
    pat = su4_pattern_rows(lam, mu, nu, eta)
    if not pat.is_valid():
        raise BetweennessError(f"pattern for eta={tuple(eta)} violates betweenness: {pat.rows}")
    return pat


def pattern_from_filling(f: LRFilling, n: int) -> ComplementaryPattern:
    """Coupled pattern read directly off a filling, for any n.

    Level U(2n-2-j) is [nu] with all symbols above a_{n-1-j} deleted.
    """
    specified = []
    for j in range(n):
        keep = n - 1 - j
        row = [f.inner.row(i) + (sum(1 for s in f.rows[i] if s <= keep) if i < len(f.rows) else 0)
               for i in range(len(f.outer))]
        specified.append(Partition(row).rows)
    eta = eta_from_filling(f, n) if n in (3, 4) else ()
    return _assemble(n, specified, eta)


def uncoupled_patterns(lam: Partition, mu: Partition, n: int
                       ) -> tuple[ComplementaryPattern, ComplementaryPattern]:
    """U(2n-2) labels of the two uncoupled factors.

    The first factor keeps [lam] from U(2n-2) down to U(n-1); the second drops
    one row of [mu] per level and reaches [0] at U(n-1), which forces zeros
    further down.
    """
    if n < 3:
        raise RankError(f"the construction needs n >= 3, got {n}")
    for p in (lam, mu):
        if len(p) > n - 1:
            raise RankError(f"{p} is not reduced for SU({n})")
    size = 2 * n - 2
    left = _assemble(n, [lam.padded(n - 1)] * n, ())
    mu_rows = mu.padded(n - 1)
    right_rows = [_pad(mu_rows[: n - 1 - j], size - j) for j in range(n)]
    right_rows += [(0,) * (size - t) for t in range(n, size)]
    right = ComplementaryPattern(size, tuple(right_rows), ())
    return left, right


# ---------------------------------------------------------------- classification
BETWEENNESS = "BETWEENNESS"
LITTLEWOOD = "LITTLEWOOD"
CONTRADICTED = "CONTRADICTED"


@dataclass
class BoundReport:
    """Per-argument tags for one coupling, plus the probe data behind them.

    ``tags[name]`` is BETWEENNESS when no betweenness-valid label violates the
    argument, LITTLEWOOD when some do and none of those is realized by a
    filling, CONTRADICTED when a realized label violates it.
    ``betweenness_only`` lists labels whose pattern is valid but that no
    filling realizes.
    """

    group: str
    lam: Partition
    mu: Partition
    nu: Partition
    tags: dict[str, str]
    betweenness_valid: list[EtaLabels]
    realized: list[EtaLabels]
    betweenness_only: list[EtaLabels]

    def to_json(self) -> dict:
        return {"group": self.group, "lambda": self.lam.to_json(), "mu": self.mu.to_json(),
                "nu": self.nu.to_json(), "tags": self.tags,
                "betweenness_only": [list(e) for e in self.betweenness_only]}


def _realized(lam: Partition, mu: Partition, nu: Partition, n: int) -> set[EtaLabels]:
    return {eta_from_filling(f, n) for f in lr_fillings(lam, mu, n) if f.outer == nu}


def classify_bounds(group: str, lam: Partition, mu: Partition, nu: Partition) -> BoundReport:
    """Tag every bound argument by probing integer labels around the valid range."""
    group = group.upper()
    span = range(-1, nu.size + 2)
    if group == "SU3":
        first, second = partition_to_dynkin(lam), partition_to_dynkin(mu)
        bounds = su3_bounds(first, second, nu)
        names = [a.name for a in bounds.min_args + bounds.max_args]
        valid = [(e,) for e in span if su3_pattern_rows(first, second, nu, e).is_valid()]

        def violated(eta):
            return bounds.violated_by(eta[0])

        n = 3
    elif group == "SU4":
        b4: Su4Bounds = su4_bounds(lam, mu, nu)
        # eta2/eta3 argument names do not depend on the lower labels
        names = [a.name for lv in (b4.eta1(), b4.eta2(0), b4.eta3(0, 0))
                 for a in lv.min_args + lv.max_args]
        valid = [eta for eta in product(span, repeat=3)
                 if su4_pattern_rows(lam, mu, nu, eta).is_valid()]
        violated = b4.violated_by
        n = 4
    else:
        raise UnsupportedRankError(f"unknown group {group!r}")

    real = _realized(lam, mu, nu, n)
    tags = {}
    for name in names:
        hits = [eta for eta in valid if name in violated(eta)]
        if any(eta in real for eta in hits):
            tags[name] = CONTRADICTED
        elif hits:
            tags[name] = LITTLEWOOD
        else:
            tags[name] = BETWEENNESS
    return BoundReport(group, lam, mu, nu, tags, valid, sorted(real),
                       [eta for eta in valid if eta not in real])


def merge_tags(reports: Sequence[BoundReport]) -> dict[str, str]:
    """An argument is LITTLEWOOD if any coupling needs it beyond betweenness."""
    rank = {BETWEENNESS: 0, LITTLEWOOD: 1, CONTRADICTED: 2}
    out: dict[str, str] = {}
    for rep in reports:
        for name, tag in rep.tags.items():
            if rank[tag] > rank[out.get(name, BETWEENNESS)]:
                out[name] = tag
            else:
                out.setdefault(name, tag)
    return out
