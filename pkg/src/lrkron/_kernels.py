"""Integer enumeration kernels.

Every kernel is written once as plain Python over int64 numpy arrays
(``<name>_py``) and exported as ``<name>``, which is the numba-compiled
version of the same source unless ``LRKRON_DISABLE_JIT`` is set to a true
value or numba cannot be imported.  Kernels never call each other so both
variants can coexist in one process (see ``benchmarks/bench_kernels.py``).
"""
import os

import numpy as np


def _jit_requested() -> bool:
    flag = os.environ.get("LRKRON_DISABLE_JIT", "").strip().lower()
    if flag in ("1", "true", "yes", "on"):
        return False
    try:
        import numba  # noqa: F401
    except ImportError:
        return False
    return True


JIT_ENABLED = _jit_requested()


def lr_fillings_py(lam, mu, n):
    """Littlewood fillings of ``lam`` by content ``mu`` in at most ``n`` rows.

    ``lam`` and ``mu`` are int64 arrays padded to length ``n``.  Returns an
    int64 array of shape ``(N, n, n)`` where ``[f, k, r]`` counts the symbols
    a_{k+1} that filling ``f`` places in row ``r``.  Symbols are added species
    by species as horizontal strips; the lattice condition is enforced on the
    running prefix, row by row.
    """
    npos = n * n
    cnt = np.zeros((n, n), dtype=np.int64)
    cur = np.zeros(n, dtype=np.int64)
    rem = np.zeros(n, dtype=np.int64)
    for r in range(n):
        cur[r] = lam[r]
        rem[r] = mu[r]
    hi = np.zeros(npos, dtype=np.int64)
    val = np.zeros(npos, dtype=np.int64)
    out = np.zeros((8, n, n), dtype=np.int64)
    nout = 0

    pos = 0
    entering = True
    while pos >= 0:
        k = pos // n
        r = pos - k * n
        if entering:
            cap = rem[k]
            if r > 0:
                # row r-1 as it was before species k was added
                room = cur[r - 1] - cnt[k, r - 1] - cur[r]
                if room < cap:
                    cap = room
            if k > 0:
                lat = 0
                for rr in range(r):
                    lat += cnt[k - 1, rr] - cnt[k, rr]
                if lat < cap:
                    cap = lat
            lo = rem[k] if r == n - 1 else 0
            if cap < lo:
                pos -= 1
                entering = False
                continue
            hi[pos] = cap
            v = lo
        else:
            v = val[pos]
            cnt[k, r] -= v
            cur[r] -= v
            rem[k] += v
            if v >= hi[pos]:
                pos -= 1
                continue
            v += 1
        val[pos] = v
        cnt[k, r] += v
        cur[r] += v
        rem[k] -= v
        if pos == npos - 1:
            if nout == out.shape[0]:
                grown = np.zeros((2 * nout, n, n), dtype=np.int64)
                grown[:nout] = out
                out = grown
            out[nout] = cnt
            nout += 1
            entering = False
        else:
            pos += 1
            entering = True
    return out[:nout].copy()


def su3_sum_py(l1, m1, l2, m2):
    """Quintuple sum for (l1 m1) x (l2 m2), index ranges as printed.

    Returns ``(terms, filtered)``.  Each row of ``terms`` is
    ``(nu1, nu2, nu3, k1, k2, k3, n1, n2)``; ``filtered`` counts index tuples
    satisfying the sum constraints whose shape was not weakly decreasing.
    """
    cap = 16
    out = np.zeros((cap, 8), dtype=np.int64)
    nout = 0
    filtered = 0
    a = l2 + m2
    for k1 in range(0, a + 1):
        for k2 in range(0, min(l1, a - k1) + 1):
            for k3 in range(0, min(m1, a - k1 - k2) + 1):
                if k1 + k2 + k3 != a:
                    continue
                for n1 in range(0, min(l1 + k1 - k2, m2, k1) + 1):
                    for n2 in range(0, min(m2 - n1, m1 + k2 - k3, k1 + k2 - n1) + 1):
                        if n1 + n2 != m2:
                            continue
                        v1 = l1 + m1 + k1
                        v2 = m1 + k2 + n1
                        v3 = k3 + n2
                        if not (v1 >= v2 and v2 >= v3 and v3 >= 0):
                            filtered += 1
                            continue
                        if nout == cap:
                            grown = np.zeros((2 * cap, 8), dtype=np.int64)
                            grown[:cap] = out
                            out = grown
                            cap *= 2
                        out[nout, 0] = v1
                        out[nout, 1] = v2
                        out[nout, 2] = v3
                        out[nout, 3] = k1
                        out[nout, 4] = k2
                        out[nout, 5] = k3
                        out[nout, 6] = n1
                        out[nout, 7] = n2
                        nout += 1
    return out[:nout].copy(), filtered


def su4_sum_py(lam, mu):
    """Nine-fold sum for [lam1 lam2 lam3] x [mu1 mu2 mu3], ranges as printed.

    Returns ``(terms, filtered)``; each row of ``terms`` is
    ``(nu1..nu4, k1..k4, l1..l3, n1, n2)``.
    """
    a1 = lam[0]
    a2 = lam[1]
    a3 = lam[2]
    b1 = mu[0]
    b2 = mu[1]
    b3 = mu[2]
    cap = 16
    out = np.zeros((cap, 13), dtype=np.int64)
    nout = 0
    filtered = 0
    for k1 in range(0, b1 + 1):
        for k2 in range(0, min(b1 - k1, a1 - a2) + 1):
            for k3 in range(0, min(a2 - a3, b1 - k1 - k2) + 1):
                for k4 in range(0, min(a3, b1 - k1 - k2 - k3) + 1):
                    if k1 + k2 + k3 + k4 != b1:
                        continue
                    for q1 in range(0, min(a1 + k1 - a2 - k2, b2, k1) + 1):
                        for q2 in range(0, min(a2 + k2 - a3 - k3, b2 - q1, k1 + k2 - q1) + 1):
                            for q3 in range(0, min(a3 + k3 - k4, b2 - q1 - q2,
                                                   k1 + k2 + k3 - q1 - q2) + 1):
                                if q1 + q2 + q3 != b2:
                                    continue
                                for n1 in range(0, min(a2 + k2 + q1 - a3 - k3 - q2, b3, q1) + 1):
                                    for n2 in range(0, min(a3 + k3 + q2 - k4 - q3, b3 - n1,
                                                           q1 + q2 - n1) + 1):
                                        if n1 + n2 != b3:
                                            continue
                                        v1 = a1 + k1
                                        v2 = a2 + k2 + q1
                                        v3 = a3 + k3 + q2 + n1
                                        v4 = k4 + q3 + n2
                                        if not (v1 >= v2 and v2 >= v3 and v3 >= v4 and v4 >= 0):
                                            filtered += 1
                                            continue
                                        if nout == cap:
                                            grown = np.zeros((2 * cap, 13), dtype=np.int64)
                                            grown[:cap] = out
                                            out = grown
                                            cap *= 2
                                        out[nout, 0] = v1
                                        out[nout, 1] = v2
                                        out[nout, 2] = v3
                                        out[nout, 3] = v4
                                        out[nout, 4] = k1
                                        out[nout, 5] = k2
                                        out[nout, 6] = k3
                                        out[nout, 7] = k4
                                        out[nout, 8] = q1
                                        out[nout, 9] = q2
                                        out[nout, 10] = q3
                                        out[nout, 11] = n1
                                        out[nout, 12] = n2
                                        nout += 1
    return out[:nout].copy(), filtered


def count_patterns_py(top):
    """Number of Gel'fand patterns with top row ``top`` (int64 array, length n)."""
    n = top.shape[0]
    if n <= 1:
        return 1
    # entries of all rows below the top, flattened row by row; row of length
    # L starts at offset start[L]
    npos = n * (n - 1) // 2
    start = np.zeros(n + 1, dtype=np.int64)
    off = 0
    for length in range(n - 1, 0, -1):
        start[length] = off
        off += length
    vals = np.zeros(npos, dtype=np.int64)
    lens = np.zeros(npos, dtype=np.int64)
    idx = np.zeros(npos, dtype=np.int64)
    p = 0
    for length in range(n - 1, 0, -1):
        for j in range(length):
            lens[p] = length
            idx[p] = j
            p += 1
    hi = np.zeros(npos, dtype=np.int64)
    total = 0
    pos = 0
    entering = True
    while pos >= 0:
        length = lens[pos]
        j = idx[pos]
        if entering:
            if length == n - 1:
                upper = top[j]
                lower = top[j + 1]
            else:
                above = start[length + 1]
                upper = vals[above + j]
                lower = vals[above + j + 1]
            hi[pos] = upper
            vals[pos] = lower
        else:
            if vals[pos] >= hi[pos]:
                pos -= 1
                continue
            vals[pos] += 1
        if pos == npos - 1:
            total += 1
            entering = False
        else:
            pos += 1
            entering = True
    return total


if JIT_ENABLED:
    from numba import njit

    lr_fillings = njit(cache=True)(lr_fillings_py)
    su3_sum = njit(cache=True)(su3_sum_py)
    su4_sum = njit(cache=True)(su4_sum_py)
    count_patterns = njit(cache=True)(count_patterns_py)
else:
    lr_fillings = lr_fillings_py
    su3_sum = su3_sum_py
    su4_sum = su4_sum_py
    count_patterns = count_patterns_py
