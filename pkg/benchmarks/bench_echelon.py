"""Benchmark: compiled row-reduction kernel vs the pure-Python twin.

The backend is chosen at import time, so each measurement runs in a
subprocess (INVFORMS_PURE=1 forces the fallback).  Workloads cover the
raw kernel on synthetic matrices and two end-to-end pipelines whose
cost is dominated by piece reductions.

    python benchmarks/bench_echelon.py
"""

import argparse
import os
import random
import subprocess
import sys
import time


def workload_echelon():
    """Banded sparse rows: the shape of real piece matrices (each
    monomial row touches a handful of nearby basis columns), which
    keeps intermediate entries small the way the structured inputs do.
    """
    from invforms.linalg import Echelon, kernel_of_rows

    rng = random.Random(1234)
    total = 0
    for nrows, ncols, band in [(600, 900, 12), (900, 1400, 9), (400, 2000, 16)]:
        mat = []
        for _ in range(nrows):
            row = [0] * ncols
            start = rng.randrange(ncols - band)
            for j in range(start, start + band):
                if rng.random() < 0.7:
                    row[j] = rng.randint(-4, 4)
            mat.append(row)
        ech = Echelon(ncols)
        for row in mat:
            ech.insert(row)
        total += ech.rank
        total += len(kernel_of_rows(mat[: nrows // 3], ncols))
    return total


def workload_surjectivity():
    from invforms.action import make_action
    from invforms.pullback import surjectivity_check

    act = make_action(3, finite_orders=[2], weight_matrix=[[1, 1, 0]])
    total = 0
    for k in (1, 2, 3):
        res = surjectivity_check(act, k, 20)
        total += sum(r[3] for r in res.table.rows)
    act2 = make_action(3, torus_rank=1, weight_matrix=[[1, 1, -3]])
    res = surjectivity_check(act2, 1, 20)
    total += sum(r[3] for r in res.table.rows)
    return total


def workload_homology():
    from invforms.action import make_action
    from invforms.euler import homology_all_weights

    act = make_action(3, torus_rank=1, weight_matrix=[[1, 1, 1]])
    total = 0
    for degree in range(17):
        res = homology_all_weights(act, degree)
        total += sum(res.homology)
    return total


WORKLOADS = {
    "echelon": workload_echelon,
    "surjectivity": workload_surjectivity,
    "homology": workload_homology,
}


def run_worker(name):
    from invforms.linalg import BACKEND

    fn = WORKLOADS[name]
    fn()  # warm caches
    best = None
    checksum = None
    for _ in range(3):
        t0 = time.perf_counter()
        checksum = fn()
        elapsed = time.perf_counter() - t0
        best = elapsed if best is None else min(best, elapsed)
    print(f"{BACKEND} {best:.4f} {checksum}")


def measure(name, pure):
    env = dict(os.environ)
    if pure:
        env["INVFORMS_PURE"] = "1"
    else:
        env.pop("INVFORMS_PURE", None)
    out = subprocess.run(
        [sys.executable, __file__, "--worker", name],
        env=env,
        capture_output=True,
        text=True,
        check=True,
    ).stdout.split()
    return out[0], float(out[1]), out[2]


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--worker", choices=sorted(WORKLOADS), default=None)
    args = parser.parse_args()
    if args.worker:
        run_worker(args.worker)
        return

    print(f"{'workload':<14} {'compiled':>10} {'pure':>10} {'speedup':>8}")
    for name in sorted(WORKLOADS):
        backend_c, tc, sum_c = measure(name, pure=False)
        backend_p, tp, sum_p = measure(name, pure=True)
        if sum_c != sum_p:
            raise SystemExit(f"{name}: backends disagree ({sum_c} vs {sum_p})")
        note = "" if backend_c == "compiled" else "  (extension not built)"
        print(f"{name:<14} {tc:>9.3f}s {tp:>9.3f}s {tp / tc:>7.2f}x{note}")


if __name__ == "__main__":
    main()
