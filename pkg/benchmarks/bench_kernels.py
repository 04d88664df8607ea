"""Compare the numba kernels with their pure-Python sources.

    python3 benchmarks/bench_kernels.py [--repeat N]

Each row times one workload both ways after a warm-up call (so compile time
is excluded) and checks that the two outputs are identical.
"""
import argparse
import time

import numpy as np

from lrkron import _kernels, partitions


def _pairs(max_boxes, rows, n):
    out = []
    for total in range(max_boxes + 1):
        for s in range(total + 1):
            for lam in partitions(s, rows):
                for mu in partitions(total - s, rows):
                    out.append((np.array(lam.padded(n), dtype=np.int64),
                                np.array(mu.padded(n), dtype=np.int64)))
    return out


def workloads():
    lr4 = _pairs(8, 3, 4)
    su3 = [(a[0] - a[1], a[1], b[0] - b[1], b[1]) for a, b in _pairs(12, 2, 2)]
    su4 = _pairs(9, 3, 3)
    tops = [np.array(p.padded(5), dtype=np.int64) for s in range(11) for p in partitions(s, 5)]
    return [
        ("lr_fillings n=4", "lr_fillings", [(a, b, 4) for a, b in lr4]),
        ("su3_sum", "su3_sum", su3),
        ("su4_sum", "su4_sum", su4),
        ("count_patterns n=5", "count_patterns", [(t,) for t in tops]),
    ]


def _run(fn, jobs):
    return [fn(*args) for args in jobs]


def _same(a, b):
    if isinstance(a, tuple):
        return all(_same(x, y) for x, y in zip(a, b))
    return np.array_equal(np.asarray(a), np.asarray(b))


def bench(repeat):
    if not _kernels.JIT_ENABLED:
        print("numba is disabled (LRKRON_DISABLE_JIT or not installed); nothing to compare")
        return
    print(f"{'workload':<22}{'calls':>7}{'python s':>11}{'numba s':>10}{'speedup':>9}  same")
    for label, name, jobs in workloads():
        py, jit = getattr(_kernels, name + "_py"), getattr(_kernels, name)
        jit(*jobs[0])
        best_py = best_jit = float("inf")
        for _ in range(repeat):
            t0 = time.perf_counter()
            a = _run(py, jobs)
            best_py = min(best_py, time.perf_counter() - t0)
            t0 = time.perf_counter()
            b = _run(jit, jobs)
            best_jit = min(best_jit, time.perf_counter() - t0)
        same = all(_same(x, y) for x, y in zip(a, b))
        print(f"{label:<22}{len(jobs):>7}{best_py:>11.3f}{best_jit:>10.4f}"
              f"{best_py / best_jit:>8.1f}x  {same}")


if __name__ == "__main__":
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    bench(parser.parse_args().repeat)
