"""Compare the compiled enumeration kernel with the pure-Python fallback.

    python benchmarks/bench_kernels.py --max-n 7 --repeat 3
"""

import argparse
import timeit

from asmgen import _kernel_py

try:
    from asmgen import _ckernel
except ImportError:
    _ckernel = None


def best(fn, n, repeat):
    return min(timeit.repeat(lambda: fn(n), number=1, repeat=repeat))


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--min-n", type=int, default=4)
    ap.add_argument("--max-n", type=int, default=7)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if _ckernel is None:
        print("compiled kernel not built; timing the pure-Python kernel only")
    print(f"{'task':<14}{'n':>3}{'python s':>12}{'cython s':>12}{'speedup':>10}")
    for task in ("count_asms", "fold_boundary"):
        for n in range(args.min_n, args.max_n + 1):
            if task == "fold_boundary" and n > 7:
                continue
            py = best(getattr(_kernel_py, task), n, args.repeat)
            if _ckernel is None:
                print(f"{task:<14}{n:>3}{py:>12.4f}")
                continue
            cy = best(getattr(_ckernel, task), n, args.repeat)
            print(f"{task:<14}{n:>3}{py:>12.4f}{cy:>12.4f}{py / cy:>9.1f}x")


if __name__ == "__main__":
    main()
