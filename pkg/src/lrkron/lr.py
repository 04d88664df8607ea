"""Littlewood-rule enumeration of Kronecker products [lam] x [mu] of U(n)."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

import numpy as np

from . import _kernels
from .partition import Partition, RankError
from .tableau import LRFilling


@dataclass
class Term:
    multiplicity: int
    fillings: list[LRFilling] = field(default_factory=list)
    labels: list[tuple[int, ...]] = field(default_factory=list)


@dataclass
class Decomposition:
    """``terms`` maps each occurring [nu] to its multiplicity and witnesses.

    Terms are kept in lexicographically descending order of ``nu``.
    ``filtered`` is only used by the closed-form generators: the number of
    index tuples they discarded because the emitted rows were not a partition.
    """

    lam: Partition
    mu: Partition
    n: int
    terms: dict[Partition, Term]
    filtered: int = 0

    def multiplicities(self) -> dict[Partition, int]:
        return {nu: t.multiplicity for nu, t in self.terms.items()}

    def to_json(self) -> dict:
        return {
            "lambda": self.lam.to_json(),
            "mu": self.mu.to_json(),
            "n": self.n,
            "terms": [
                {"nu": nu.to_json(), "multiplicity": t.multiplicity,
                 "eta_labels": [list(e) for e in t.labels]}
                for nu, t in self.terms.items()
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "Decomposition":
        terms = {}
        for rec in data["terms"]:
            terms[Partition.from_json(rec["nu"])] = Term(
                rec["multiplicity"], [], [tuple(e) for e in rec.get("eta_labels", [])])
        return cls(Partition.from_json(data["lambda"]), Partition.from_json(data["mu"]),
                   int(data["n"]), _sorted_terms(terms))


def _sorted_terms(terms: dict) -> dict:
    return {nu: terms[nu] for nu in sorted(terms, reverse=True)}


def _check_inputs(lam: Partition, mu: Partition, n: int) -> None:
    if n < 1:
        raise RankError(f"rank must be positive, got {n}")
    for p in (lam, mu):
        if len(p) > n:
            raise RankError(f"{p} has more than n={n} rows")


def filling_counts(lam: Partition, mu: Partition, n: int) -> np.ndarray:
    """Raw kernel output: ``(N, n, n)`` symbol-by-row count matrices."""
    _check_inputs(lam, mu, n)
    return _kernels.lr_fillings(np.array(lam.padded(n), dtype=np.int64),
                                np.array(mu.padded(n), dtype=np.int64), n)


def lr_fillings(lam: Partition, mu: Partition, n: int) -> Iterator[LRFilling]:
    """Every Littlewood filling of ``lam`` by content ``mu`` with at most ``n`` rows.

    Ordered by outer shape (lexicographically descending), then by the
    per-row symbol tuples.
    """
    fills = [LRFilling.from_counts(lam, c) for c in filling_counts(lam, mu, n)]
    fills.sort(key=lambda f: (_desc_key(f.outer), f.rows))
    yield from fills


def _desc_key(p: Partition):
    # descending lexicographic order of partitions as an ascending sort key
    return tuple(-x for x in p.rows) + (1,)


def lr_multiplicities(lam: Partition, mu: Partition, n: int) -> dict[Partition, int]:
    """Multiplicity map only, without building filling objects."""
    counts = filling_counts(lam, mu, n)
    base = np.array(lam.padded(n), dtype=np.int64)
    out: dict[Partition, int] = {}
    for c in counts:
        nu = Partition(tuple(int(x) for x in base + c.sum(axis=0)))
        out[nu] = out.get(nu, 0) + 1
    return _sorted_terms(out)


def decompose(lam: Partition, mu: Partition, n: int, labels: bool = True) -> Decomposition:
    """Group the fillings of [lam] x [mu] by outer shape.

    For n in {3, 4} with both factors already reduced (at most n-1 rows) each
    filling also gets its outer-multiplicity label.
    """
    from .closed_form import eta_from_filling

    want_labels = labels and n in (3, 4) and len(lam) < n and len(mu) < n
    terms: dict[Partition, Term] = {}
    for f in lr_fillings(lam, mu, n):
        t = terms.setdefault(f.outer, Term(0))
        t.multiplicity += 1
        t.fillings.append(f)
        if want_labels:
            t.labels.append(eta_from_filling(f, n))
    return Decomposition(lam, mu, n, _sorted_terms(terms))


def lr_coefficient(lam: Partition, mu: Partition, nu: Partition, n: int) -> int:
    if nu.size != lam.size + mu.size or len(nu) > n:
        return 0
    return lr_multiplicities(lam, mu, n).get(nu, 0)
