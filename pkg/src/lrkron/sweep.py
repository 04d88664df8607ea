"""Closed-form versus Littlewood-enumeration sweeps.

A sweep visits every reduced ordered pair (lam, mu) up to a box budget and, for
each, compares the closed-form decomposition, multiplicities, labels and
coupled patterns against the filling enumeration.  Disagreements become
records of the JSON-lines discrepancy report; nothing is asserted here.
"""
from __future__ import annotations

import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .closed_form import (
    su3_bounds, su3_conditions, su3_decompose_sum, su4_bounds, su4_conditions,
    su4_decompose_sum,
)
from .complement import su3_pattern_rows, su4_pattern_rows
from .lr import decompose
from .partition import Partition, dimension, partition_to_dynkin, partitions

GROUPS = ("SU3", "SU4")
_RANK = {"SU3": 3, "SU4": 4}


@dataclass
class SweepConfig:
    group: str = "both"
    max_boxes: int = 6
    strict: bool = False
    output_path: str | None = None
    parallelism: int = 1

    def __post_init__(self):
        self.group = self.group.upper() if self.group.lower() != "both" else "both"
        if self.group not in GROUPS + ("both",):
            raise ValueError(f"unknown group {self.group!r}")
        if self.max_boxes < 0:
            raise ValueError("max_boxes must be >= 0")
        if self.parallelism < 1:
            raise ValueError("parallelism must be >= 1")

    @property
    def groups(self) -> tuple[str, ...]:
        return GROUPS if self.group == "both" else (self.group,)


@dataclass
class CaseResult:
    lam: Partition
    mu: Partition
    comparisons: int = 0
    filtered: int = 0
    records: list[dict] = field(default_factory=list)


@dataclass
class SweepResult:
    group: str
    max_boxes: int
    cases: int = 0
    comparisons: int = 0
    filtered: int = 0
    records: list[dict] = field(default_factory=list)

    @property
    def mismatches(self) -> int:
        return len(self.records)

    def summary(self) -> str:
        return (f"{self.group}: max_boxes={self.max_boxes} cases={self.cases} "
                f"comparisons={self.comparisons} filtered={self.filtered} "
                f"mismatches={self.mismatches}")


def sweep_cases(group: str, max_boxes: int) -> list[tuple[Partition, Partition]]:
    """Ordered pairs of reduced irreps with |lam| + |mu| <= max_boxes."""
    rows = _RANK[group] - 1
    out = []
    for total in range(max_boxes + 1):
        for s in range(total + 1):
            for lam in partitions(s, rows):
                for mu in partitions(total - s, rows):
                    out.append((lam, mu))
    return out


def _record(group, kind, lam, mu, nu, formula, oracle, bounds=None, implicated=()):
    return {"group": group, "kind": kind, "lambda": lam.to_json(), "mu": mu.to_json(),
            "nu": None if nu is None else nu.to_json(), "formula": formula, "oracle": oracle,
            "bounds": bounds or {}, "implicated": sorted(set(implicated))}


def _su4_bounds_json(b, labels: Iterable[tuple[int, int, int]]) -> dict:
    out = {"eta1": b.eta1().to_json()}
    e1s = sorted({e[0] for e in labels})
    out["eta2"] = {str(e1): b.eta2(e1).to_json() for e1 in e1s}
    return out


def check_case(group: str, lam: Partition, mu: Partition) -> CaseResult:
    n = _RANK[group]
    res = CaseResult(lam, mu)
    oracle = decompose(lam, mu, n)
    if group == "SU3":
        first, second = partition_to_dynkin(lam), partition_to_dynkin(mu)
        generated = su3_decompose_sum(first, second)
    else:
        generated = su4_decompose_sum(lam, mu)
    res.filtered = generated.filtered

    # generated multiset versus enumeration, filling by filling
    shapes = set(oracle.terms) | set(generated.terms)
    for nu in sorted(shapes, reverse=True):
        res.comparisons += 1
        o = oracle.terms.get(nu)
        g = generated.terms.get(nu)
        o_fill = set(o.fillings) if o else set()
        g_fill = set(g.fillings) if g else set()
        if len(g.fillings if g else ()) != len(o_fill) or g_fill != o_fill:
            bad = []
            if g_fill - o_fill:
                bad.append("sum:emits-non-littlewood-filling")
            if o_fill - g_fill:
                bad.append("sum:misses-littlewood-filling")
            if g and len(g.fillings) != len(g_fill):
                bad.append("sum:duplicate-index-tuple")
            res.records.append(_record(group, "sum", lam, mu, nu,
                                       g.multiplicity if g else 0,
                                       o.multiplicity if o else 0, implicated=bad))

    # multiplicity formula and labels for every candidate shape
    total = lam.size + mu.size
    for nu in partitions(total, n):
        res.comparisons += 1
        term = oracle.terms.get(nu)
        o_labels = list(term.labels) if term else []
        o_mult = term.multiplicity if term else 0
        if group == "SU3":
            b = su3_bounds(first, second, nu)
            f_labels = [(e,) for e in b.values()]
            bounds_json = b.to_json()

            def rejected(eta, b=b):
                return b.violated_by(eta[0])

            def conditions(eta, nu=nu):
                return su3_conditions(first, second, nu, eta[0])

            def pattern(eta, nu=nu):
                return su3_pattern_rows(first, second, nu, eta[0])
        else:
            b4 = su4_bounds(lam, mu, nu)
            f_labels = b4.labels()
            bounds_json = _su4_bounds_json(b4, f_labels + o_labels)
            rejected = b4.violated_by

            def conditions(eta, nu=nu):
                return su4_conditions(lam, mu, nu, eta)

            def pattern(eta, nu=nu):
                return su4_pattern_rows(lam, mu, nu, eta)

        f_set, o_set = set(f_labels), set(o_labels)
        implicated = []
        for eta in f_set - o_set:
            implicated += [name for name, ok in conditions(eta).items() if not ok]
        for eta in o_set - f_set:
            implicated += rejected(eta)
        if len(f_labels) != o_mult:
            res.records.append(_record(group, "multiplicity", lam, mu, nu, len(f_labels),
                                       o_mult, bounds_json, implicated))
        elif f_set != o_set or len(o_set) != o_mult:
            if len(o_set) != o_mult:
                implicated.append("readout:labels-not-distinct")
            res.records.append(_record(group, "labels", lam, mu, nu, len(f_set),
                                       len(o_set), bounds_json, implicated))
        for eta in f_labels:
            if not pattern(eta).is_valid():
                res.records.append(_record(group, "pattern", lam, mu, nu, len(f_labels), o_mult,
                                           bounds_json, [f"betweenness:{list(eta)}"]))

    # dimension sum rule
    res.comparisons += 1
    lhs = sum(t.multiplicity * dimension(nu, n) for nu, t in oracle.terms.items())
    rhs = dimension(lam, n) * dimension(mu, n)
    if lhs != rhs:
        res.records.append(_record(group, "dimension", lam, mu, None, lhs, rhs))
    return res


def _check(args):
    return check_case(*args)


def threads_from_env(default: int) -> int:
    raw = os.environ.get("LRKRON_THREADS")
    if raw is None or not raw.strip():
        return default
    value = int(raw)
    if value < 1:
        raise ValueError(f"LRKRON_THREADS must be >= 1, got {raw!r}")
    return value


def _map(jobs: list, parallelism: int) -> Iterator[CaseResult]:
    if parallelism <= 1 or len(jobs) < 2:
        return map(_check, jobs)
    chunk = max(1, len(jobs) // (8 * parallelism))
    pool = ProcessPoolExecutor(max_workers=parallelism)
    try:
        return iter(list(pool.map(_check, jobs, chunksize=chunk)))
    finally:
        pool.shutdown()


def run_sweep(group: str, max_boxes: int, parallelism: int = 1) -> SweepResult:
    jobs = [(group, lam, mu) for lam, mu in sweep_cases(group, max_boxes)]
    result = SweepResult(group, max_boxes)
    for case in _map(jobs, parallelism):
        result.cases += 1
        result.comparisons += case.comparisons
        result.filtered += case.filtered
        result.records.extend(case.records)
    return result


def write_report(path: str, records: Iterable[dict]) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for rec in records:
            fh.write(json.dumps(rec, sort_keys=True) + "\n")


def read_report(path: str) -> list[dict]:
    with open(path, encoding="utf-8") as fh:
        return [json.loads(line) for line in fh if line.strip()]
