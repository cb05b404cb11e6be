"""Compare the compiled and pure-Python flag-graph kernels.

    python3 benchmarks/bench_kernels.py [--repeat N] [--instances cell24,cell600,...]

Each kernel is timed on the sigma tables of a few complexes; the zigzag
decomposition itself is timed end to end with each backend swapped in.
"""
import argparse
import time

import numpy as np

from zigzag import _kernels, zigzags
from zigzag import constructors as C
from zigzag._kernels import _pykernels
from zigzag.flags import FlagIndex
from zigzag.wythoff import wythoff

try:
    from zigzag._kernels import _ckernels
except ImportError:
    _ckernels = None

INSTANCES = {
    "cell24": C.cell24,
    "cell600": C.cell600,
    "snub_24cell": C.snub_24cell,
    "cell600_01": lambda: wythoff(C.cell600(), (0, 1)),
    "half_cube_6": lambda: C.half_cube(6),
}


def best(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def kernel_cases(fi):
    s = fi.sigma
    T = fi.translate
    return {
        "perm_cycles": lambda m: m.perm_cycles(T),
        "residue_labels": lambda m: m.residue_labels(s, range(1, len(s))),
        "bfs_parity": lambda m: m.bfs_parity(s, 0),
        "extend_map": lambda m: m.extend_map(s, s, 0, 0),
    }


def with_backend(mod, fn):
    # callers look kernels up on the package module, so swapping attributes is enough
    saved = {k: getattr(_kernels, k) for k in ("perm_cycles", "residue_labels", "bfs_parity", "extend_map")}
    try:
        for k in saved:
            setattr(_kernels, k, getattr(mod, k))
        return fn()
    finally:
        for k, v in saved.items():
            setattr(_kernels, k, v)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--instances", default=",".join(INSTANCES))
    args = ap.parse_args()
    if _ckernels is None:
        raise SystemExit("compiled kernels are not built; run `pip install --no-build-isolation -e .`")

    print(f"{'instance':<14} {'flags':>8} {'kernel':<16} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    for name in args.instances.split(","):
        K = INSTANCES[name]()
        fi = FlagIndex(K)
        for kname, case in kernel_cases(fi).items():
            tp = best(lambda: case(_pykernels), args.repeat)
            tc = best(lambda: case(_ckernels), args.repeat)
            print(f"{name:<14} {fi.n_flags:>8} {kname:<16} {tp:>10.4f} {tc:>10.4f} {tp / tc:>7.1f}x")
        tp = best(lambda: with_backend(_pykernels, lambda: zigzags(K, fi)), args.repeat)
        tc = best(lambda: with_backend(_ckernels, lambda: zigzags(K, fi)), args.repeat)
        print(f"{name:<14} {fi.n_flags:>8} {'zigzags':<16} {tp:>10.4f} {tc:>10.4f} {tp / tc:>7.1f}x")
        assert np.array_equal(
            with_backend(_pykernels, lambda: zigzags(K, fi)).zigzag_of,
            with_backend(_ckernels, lambda: zigzags(K, fi)).zigzag_of,
        )


if __name__ == "__main__":
    main()
