"""Compiled vs pure-Python graph kernels.

    python3 benchmarks/bench_kernels.py [--repeat N]

Prints one line per kernel and workload with the best wall time of each
backend and the speedup. Both backends must produce identical output; the
script exits non-zero if they disagree.
"""

import argparse
import sys
import time

import numpy as np

from treecount._kernels import _pykernels as py

try:
    from treecount._kernels import _ckernels as cy
except ImportError:
    sys.exit("compiled kernels are not built; run `pip install -e . --no-build-isolation` first")

from treecount.treegen import gen_lifted_complete, gen_random_regular, lift, named_graph


def best_of(fn, repeat):
    best, out = float("inf"), None
    for _ in range(repeat):
        start = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - start)
    return best, out


def same(a, b):
    if isinstance(a, tuple):
        return all(same(x, y) for x, y in zip(a, b))
    return np.array_equal(np.asarray(a), np.asarray(b))


def workloads():
    petersen_lift = lift(named_graph("petersen"))
    big = gen_random_regular(20000, 3, 12, seed=1)
    for name, g in (("petersen lift (640-comp)", petersen_lift), ("random n=20000 d=3", big)):
        args = (g.indptr, g.indices)
        yield "ball", f"{name} r=6", lambda m, a=args: m.ball(*a, 0, 6)
        yield "ball", f"{name} full", lambda m, a=args: m.ball(*a, 0, -1)
    tc = named_graph("tutte_coxeter")
    yield "girth", "tutte_coxeter", lambda m: m.girth(tc.indptr, tc.indices, 64)
    g6 = gen_lifted_complete(3, 1)
    yield "girth", "lifted K4", lambda m: m.girth(g6.indptr, g6.indices, 64)
    yield "girth", "random n=20000 cutoff 12", lambda m: m.girth(big.indptr, big.indices, 12)
    yield "random_regular", "n=2000 d=3 girth 8", lambda m: m.random_regular(2000, 3, 8, 5, 1000)
    yield "random_regular", "n=1000 d=4 girth 6", lambda m: m.random_regular(1000, 4, 6, 5, 1000)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    print(f"{'kernel':<15} {'workload':<32} {'cython s':>10} {'python s':>10} {'speedup':>8}")
    ok = True
    for kernel, label, run in workloads():
        t_cy, out_cy = best_of(lambda: run(cy), args.repeat)
        t_py, out_py = best_of(lambda: run(py), args.repeat)
        if not same(out_cy, out_py):
            ok = False
            label += " MISMATCH"
        print(f"{kernel:<15} {label:<32} {t_cy:>10.4f} {t_py:>10.4f} {t_py / t_cy:>7.1f}x")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
