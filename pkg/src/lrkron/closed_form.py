"""Explicit SU(3) and SU(4) multiplicity machinery.

The decomposition sums, the eta bounds and the multiplicity counts are
transcribed argument by argument.  Every max/min argument carries a name so
that a disagreement with the Littlewood enumeration can be pinned on it.
"""
from __future__ import annotations

from dataclasses import dataclass
from types import SimpleNamespace
from typing import Callable, Sequence

import numpy as np

from . import _kernels
from .lr import Decomposition, Term, _sorted_terms
from .partition import Partition, RankError, Su3Dynkin, dynkin_to_partition
from .tableau import LRFilling

EtaLabels = tuple[int, ...]


class BoxCountError(ValueError):
    pass


class UnsupportedRankError(RankError):
    pass


@dataclass(frozen=True)
class BoundArg:
    """One argument of a max() or min(); ``name`` is ``<level>_<min|max>:<expr>``."""

    name: str
    value: int


@dataclass(frozen=True)
class Level:
    min_args: tuple[BoundArg, ...]
    max_args: tuple[BoundArg, ...]

    @property
    def lo(self) -> int:
        return max(a.value for a in self.min_args)

    @property
    def hi(self) -> int:
        return min(a.value for a in self.max_args)

    def values(self) -> range:
        return range(self.lo, self.hi + 1)

    def violated_by(self, x: int) -> list[str]:
        return ([a.name for a in self.min_args if x < a.value]
                + [a.name for a in self.max_args if x > a.value])

    def to_json(self) -> dict:
        return {"min": {a.name: a.value for a in self.min_args},
                "max": {a.name: a.value for a in self.max_args}}


Arg = tuple[str, Callable[[SimpleNamespace], int]]


def _level(name: str, mins: Sequence[Arg], maxs: Sequence[Arg], v: SimpleNamespace) -> Level:
    return Level(tuple(BoundArg(f"{name}_min:{e}", f(v)) for e, f in mins),
                 tuple(BoundArg(f"{name}_max:{e}", f(v)) for e, f in maxs))


# ---------------------------------------------------------------- SU(3)
# (l1 u1) x (l2 u2) -> [m1 m2 m3]; l/u are the Dynkin labels lambda/mu
_SU3_MIN: list[Arg] = [
    ("0", lambda v: 0),
    ("mu2-m3", lambda v: v.u2 - v.m3),
    ("m2-lambda1-mu1", lambda v: v.m2 - v.l1 - v.u1),
]
_SU3_MAX: list[Arg] = [
    ("m1-lambda1-mu1", lambda v: v.m1 - v.l1 - v.u1),
    ("mu2", lambda v: v.u2),
    ("m2-mu1", lambda v: v.m2 - v.u1),
    ("lambda2+mu2-m3", lambda v: v.l2 + v.u2 - v.m3),
    ("mu1+mu2-m3", lambda v: v.u1 + v.u2 - v.m3),
    ("m2-m3", lambda v: v.m2 - v.m3),
]


def _su3_vars(first: Su3Dynkin, second: Su3Dynkin, m: Partition) -> SimpleNamespace:
    if len(m) > 3:
        raise RankError(f"{m} has more than three rows")
    total = first.lam + 2 * first.mu + second.lam + 2 * second.mu
    if m.size != total:
        raise BoxCountError(f"{m} has {m.size} boxes, the product has {total}")
    m1, m2, m3 = m.padded(3)
    return SimpleNamespace(l1=first.lam, u1=first.mu, l2=second.lam, u2=second.mu,
                           m1=m1, m2=m2, m3=m3)


@dataclass(frozen=True)
class Su3Bounds(Level):
    @property
    def eta_min(self) -> int:
        return self.lo

    @property
    def eta_max(self) -> int:
        return self.hi

    @property
    def multiplicity(self) -> int:
        return max(0, self.hi - self.lo + 1)


def su3_bounds(first: Su3Dynkin, second: Su3Dynkin, m: Partition) -> Su3Bounds:
    lv = _level("eta", _SU3_MIN, _SU3_MAX, _su3_vars(first, second, m))
    return Su3Bounds(lv.min_args, lv.max_args)


def su3_multiplicity(first: Su3Dynkin, second: Su3Dynkin, m: Partition) -> int:
    return su3_bounds(first, second, m).multiplicity


def su3_eta_labels(first: Su3Dynkin, second: Su3Dynkin, m: Partition) -> list[EtaLabels]:
    return [(eta,) for eta in su3_bounds(first, second, m).values()]


def su3_conditions(first: Su3Dynkin, second: Su3Dynkin, m: Partition,
                   eta: int) -> dict[str, bool]:
    """Elementary Littlewood conditions on the filling that ``eta`` describes.

    The filling has k1, k2, k3 alpha boxes in rows 1-3 and n1 = eta,
    n2 = mu2 - eta beta boxes in rows 2-3.  All True iff the filling exists.
    """
    v = _su3_vars(first, second, m)
    k1 = v.m1 - v.l1 - v.u1
    k2 = v.m2 - v.u1 - eta
    k3 = v.m3 - v.u2 + eta
    n1, n2 = eta, v.u2 - eta
    return {
        "k1>=0": k1 >= 0, "k2>=0": k2 >= 0, "k3>=0": k3 >= 0,
        "n1>=0": n1 >= 0, "n2>=0": n2 >= 0,
        "strip:k2<=lambda1": k2 <= v.l1,
        "strip:k3<=mu1": k3 <= v.u1,
        "strip:n1<=lambda1+k1-k2": n1 <= v.l1 + k1 - k2,
        "strip:n2<=mu1+k2-k3": n2 <= v.u1 + k2 - k3,
        "lattice:n1<=k1": n1 <= k1,
        "lattice:n1+n2<=k1+k2": n1 + n2 <= k1 + k2,
    }


def _su3_filling(inner: Partition, k1, k2, k3, n1, n2) -> LRFilling:
    return LRFilling.from_counts(inner, [[k1, k2, k3], [0, n1, n2]])


def su3_decompose_sum(first: Su3Dynkin, second: Su3Dynkin) -> Decomposition:
    """Decomposition generated by the quintuple sum; one filling per index tuple."""
    terms_arr, filtered = _kernels.su3_sum(first.lam, first.mu, second.lam, second.mu)
    inner = dynkin_to_partition(first)
    terms: dict[Partition, Term] = {}
    for row in terms_arr:
        v1, v2, v3, k1, k2, k3, n1, n2 = (int(x) for x in row)
        nu = Partition(v1, v2, v3)
        t = terms.setdefault(nu, Term(0))
        t.multiplicity += 1
        t.fillings.append(_su3_filling(inner, k1, k2, k3, n1, n2))
        t.labels.append((n1,))
    return Decomposition(inner, dynkin_to_partition(second), 3, _sorted_terms(terms),
                         filtered=int(filtered))


# ---------------------------------------------------------------- SU(4)
_ETA1_MIN: list[Arg] = [
    ("0", lambda v: 0),
    ("nu2-lambda1", lambda v: v.n2 - v.a1),
]
_ETA1_MAX: list[Arg] = [
    ("nu2-lambda2", lambda v: v.n2 - v.a2),
    ("nu1-lambda1", lambda v: v.n1 - v.a1),
]
_ETA2_MIN: list[Arg] = [
    ("nu3-nu2+eta1", lambda v: v.n3 - v.n2 + v.e1),
    ("0", lambda v: 0),
]
_ETA2_MAX: list[Arg] = [
    ("eta1", lambda v: v.e1),
    ("mu3", lambda v: v.b3),
    ("nu3-nu4", lambda v: v.n3 - v.n4),
]


def _int_part_half(x: int) -> int:
    # integer part taken as floor, also for negative x
    return x // 2


_ETA3_MIN: list[Arg] = [
    ("2eta2-eta1+mu2+nu4-nu3-mu3", lambda v: 2 * v.e2 - v.e1 + v.b2 + v.n4 - v.n3 - v.b3),
    ("eta2-eta1+lambda3+mu2-nu3", lambda v: v.e2 - v.e1 + v.a3 + v.b2 - v.n3),
    ("eta2+nu4-lambda3-mu3", lambda v: v.e2 + v.n4 - v.a3 - v.b3),
    ("eta2+lambda1+lambda2+lambda3+2mu2-nu1-nu2-nu3",
     lambda v: v.e2 + v.a1 + v.a2 + v.a3 + 2 * v.b2 - v.n1 - v.n2 - v.n3),
    ("eta1+lambda1+lambda2+mu2-nu1-nu2", lambda v: v.e1 + v.a1 + v.a2 + v.b2 - v.n1 - v.n2),
    ("0", lambda v: 0),
    ("Int[(eta2+lambda1+lambda2+lambda3+2mu2-nu1-nu2-nu3)/2]",
     lambda v: _int_part_half(v.e2 + v.a1 + v.a2 + v.a3 + 2 * v.b2 - v.n1 - v.n2 - v.n3)),
]
_ETA3_MAX: list[Arg] = [
    ("mu2-eta1", lambda v: v.b2 - v.e1),
    ("nu4-mu3+eta2", lambda v: v.n4 - v.b3 + v.e2),
    ("mu2-mu3", lambda v: v.b2 - v.b3),
    ("lambda2-nu3+mu2-eta1+eta2", lambda v: v.a2 - v.n3 + v.b2 - v.e1 + v.e2),
    ("mu2-eta2", lambda v: v.b2 - v.e2),
]


@dataclass(frozen=True)
class Su4Bounds:
    """Nested bounds: eta1, then eta2(eta1), then eta3(eta1, eta2)."""

    lam: tuple[int, int, int]
    mu: tuple[int, int, int]
    nu: tuple[int, int, int, int]

    def _vars(self, e1: int = 0, e2: int = 0) -> SimpleNamespace:
        a1, a2, a3 = self.lam
        b1, b2, b3 = self.mu
        n1, n2, n3, n4 = self.nu
        return SimpleNamespace(a1=a1, a2=a2, a3=a3, b1=b1, b2=b2, b3=b3,
                               n1=n1, n2=n2, n3=n3, n4=n4, e1=e1, e2=e2)

    def eta1(self) -> Level:
        return _level("eta1", _ETA1_MIN, _ETA1_MAX, self._vars())

    def eta2(self, eta1: int) -> Level:
        return _level("eta2", _ETA2_MIN, _ETA2_MAX, self._vars(eta1))

    def eta3(self, eta1: int, eta2: int) -> Level:
        return _level("eta3", _ETA3_MIN, _ETA3_MAX, self._vars(eta1, eta2))

    def labels(self) -> list[EtaLabels]:
        out = []
        for e1 in self.eta1().values():
            for e2 in self.eta2(e1).values():
                for e3 in self.eta3(e1, e2).values():
                    out.append((e1, e2, e3))
        return out

    def violated_by(self, eta: EtaLabels) -> list[str]:
        """Names of the bound arguments that reject ``eta``."""
        e1, e2, e3 = eta
        return (self.eta1().violated_by(e1) + self.eta2(e1).violated_by(e2)
                + self.eta3(e1, e2).violated_by(e3))


def su4_bounds(lam: Partition, mu: Partition, nu: Partition) -> Su4Bounds:
    for p, rows in ((lam, 3), (mu, 3), (nu, 4)):
        if len(p) > rows:
            raise RankError(f"{p} has more than {rows} rows")
    if nu.size != lam.size + mu.size:
        raise BoxCountError(f"{nu} has {nu.size} boxes, the product has {lam.size + mu.size}")
    return Su4Bounds(lam.padded(3), mu.padded(3), nu.padded(4))


def su4_eta_labels(lam: Partition, mu: Partition, nu: Partition) -> list[EtaLabels]:
    return su4_bounds(lam, mu, nu).labels()


def su4_multiplicity(lam: Partition, mu: Partition, nu: Partition) -> int:
    return len(su4_eta_labels(lam, mu, nu))


def _su4_indices(lam, mu, nu, eta):
    a1, a2, a3 = lam
    b1, b2, b3 = mu
    n1, n2, n3, n4 = nu
    e1, e2, e3 = eta
    k = (n1 - a1, n2 - a2 - e1, n3 - a3 - b2 + e1 - e2 + e3, n4 - b3 + e2 - e3)
    q = (e1, b2 - e1 - e3, e3)
    g = (e2, b3 - e2)
    return k, q, g


def su4_conditions(lam: Partition, mu: Partition, nu: Partition,
                   eta: EtaLabels) -> dict[str, bool]:
    """Elementary Littlewood conditions on the filling described by ``eta``."""
    lv, mv, nv = lam.padded(3), mu.padded(3), nu.padded(4)
    (k1, k2, k3, k4), (l1, l2, l3), (g1, g2) = _su4_indices(lv, mv, nv, eta)
    a1, a2, a3 = lv
    conds = {f"{name}>=0": val >= 0 for name, val in
             zip(("k1", "k2", "k3", "k4", "l1", "l2", "l3", "n1", "n2"),
                 (k1, k2, k3, k4, l1, l2, l3, g1, g2))}
    conds.update({
        "strip:k2<=lambda1-lambda2": k2 <= a1 - a2,
        "strip:k3<=lambda2-lambda3": k3 <= a2 - a3,
        "strip:k4<=lambda3": k4 <= a3,
        "strip:l1<=lambda1+k1-lambda2-k2": l1 <= a1 + k1 - a2 - k2,
        "strip:l2<=lambda2+k2-lambda3-k3": l2 <= a2 + k2 - a3 - k3,
        "strip:l3<=lambda3+k3-k4": l3 <= a3 + k3 - k4,
        "strip:n1<=lambda2+k2+l1-lambda3-k3-l2": g1 <= a2 + k2 + l1 - a3 - k3 - l2,
        "strip:n2<=lambda3+k3+l2-k4-l3": g2 <= a3 + k3 + l2 - k4 - l3,
        "lattice:l1<=k1": l1 <= k1,
        "lattice:l1+l2<=k1+k2": l1 + l2 <= k1 + k2,
        "lattice:l1+l2+l3<=k1+k2+k3": l1 + l2 + l3 <= k1 + k2 + k3,
        "lattice:n1<=l1": g1 <= l1,
        "lattice:n1+n2<=l1+l2": g1 + g2 <= l1 + l2,
    })
    return conds


def su4_decompose_sum(lam: Partition, mu: Partition) -> Decomposition:
    """Decomposition generated by the nine-fold sum; one filling per index tuple."""
    for p in (lam, mu):
        if len(p) > 3:
            raise RankError(f"{p} has more than three rows")
    terms_arr, filtered = _kernels.su4_sum(np.array(lam.padded(3), dtype=np.int64),
                                           np.array(mu.padded(3), dtype=np.int64))
    terms: dict[Partition, Term] = {}
    for row in terms_arr:
        r = [int(x) for x in row]
        nu = Partition(r[0:4])
        k1, k2, k3, k4, l1, l2, l3, g1, g2 = r[4:]
        t = terms.setdefault(nu, Term(0))
        t.multiplicity += 1
        t.fillings.append(LRFilling.from_counts(
            lam, [[k1, k2, k3, k4], [0, l1, l2, l3], [0, 0, g1, g2]]))
        t.labels.append((l1, g1, l3))
    return Decomposition(lam, mu, 4, _sorted_terms(terms), filtered=int(filtered))


# ---------------------------------------------------------------- readout
def eta_from_filling(f: LRFilling, n: int) -> EtaLabels:
    """Outer-multiplicity label of a filling.

    SU(3): number of a2 symbols in row 2.  SU(4): (a2 in row 2, a3 in row 3,
    a2 in row 4).
    """
    if n == 3:
        return (f.count(2, 2),)
    if n == 4:
        return (f.count(2, 2), f.count(3, 3), f.count(2, 4))
    raise UnsupportedRankError(f"labels are defined for n = 3, 4 only, got {n}")
