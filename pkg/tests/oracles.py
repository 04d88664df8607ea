"""Brute-force references that share no code with the package kernels."""
from __future__ import annotations

from itertools import product
from math import prod


def partitions_of(size, max_rows):
    def rec(left, cap, rows):
        if left == 0:
            yield tuple(rows)
            return
        if len(rows) == max_rows:
            return
        for x in range(min(left, cap), 0, -1):
            yield from rec(left - x, x, rows + [x])
    yield from rec(size, size, [])


def _row(p, i):
    return p[i] if i < len(p) else 0


def skew_fillings(inner, outer, content):
    """All semistandard fillings of outer/inner with the given content.

    Yields dicts {(row, col): symbol}.
    """
    cells = [(i, j) for i in range(len(outer)) for j in range(_row(inner, i), outer[i])]
    nsym = len(content)
    if len(cells) != sum(content):
        return
    fill = {}
    used = [0] * nsym

    def rec(idx):
        if idx == len(cells):
            yield dict(fill)
            return
        i, j = cells[idx]
        lo = 1
        if (i, j - 1) in fill:
            lo = max(lo, fill[(i, j - 1)])
        if (i - 1, j) in fill:
            lo = max(lo, fill[(i - 1, j)] + 1)
        for s in range(lo, nsym + 1):
            if used[s - 1] < content[s - 1]:
                used[s - 1] += 1
                fill[(i, j)] = s
                yield from rec(idx + 1)
                del fill[(i, j)]
                used[s - 1] -= 1

    yield from rec(0)


def is_lattice(fill, outer):
    """Reading right to left along rows, top to bottom."""
    seen = {}
    for i in range(len(outer)):
        for j in range(outer[i] - 1, -1, -1):
            s = fill.get((i, j))
            if s is None:
                continue
            seen[s] = seen.get(s, 0) + 1
            if s > 1 and seen[s] > seen.get(s - 1, 0):
                return False
    return True


def contains(outer, inner):
    return len(inner) <= len(outer) and all(outer[i] >= inner[i] for i in range(len(inner)))


def lr_multiplicities(lam, mu, n):
    """{nu: c} by enumerating every semistandard skew filling and filtering."""
    out = {}
    total = sum(lam) + sum(mu)
    for nu in partitions_of(total, n):
        if not contains(nu, lam):
            continue
        c = sum(1 for f in skew_fillings(lam, nu, mu) if is_lattice(f, nu))
        if c:
            out[nu] = c
    return out


def weyl_dimension(p, n):
    """Weyl formula prod_{i<j} (p_i - p_j + j - i) / (j - i)."""
    q = [_row(p, i) for i in range(n)]
    num = prod(q[i] - q[j] + j - i for i in range(n) for j in range(i + 1, n))
    den = prod(j - i for i in range(n) for j in range(i + 1, n))
    return num // den


def count_semistandard(shape, n):
    """Number of semistandard tableaux of ``shape`` with entries 1..n, by brute force."""
    cells = [(i, j) for i in range(len(shape)) for j in range(shape[i])]
    count = 0
    for vals in product(range(1, n + 1), repeat=len(cells)):
        t = dict(zip(cells, vals))
        if all(t[(i, j)] >= t[(i, j - 1)] for i, j in cells if j) and \
           all(t[(i, j)] > t[(i - 1, j)] for i, j in cells if i):
            count += 1
    return count
