"""Compare the compiled and numpy kernel backends.

    python benchmarks/bench_kernels.py --n 16 20 22 --repeat 3
"""

import argparse
import time

import numpy as np

from ffspec import kernels
from ffspec.gf2ext import make_field


def best_of(repeat, fn):
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t)
    return best


def bench(n, repeat):
    fs = make_field(n)
    d = 3 * (1 << (n // 2)) - 2
    rows = {}
    for name, impl in kernels.backends().items():
        table = impl.power_map(fs.exp_table, fs.log_table, d)
        out = np.zeros(fs.order, dtype=np.int64)
        rows[name] = {
            "exp_table": best_of(repeat, lambda: impl.build_exp_table(n, fs.modulus, fs.generator)),
            "power_map": best_of(repeat, lambda: impl.power_map(fs.exp_table, fs.log_table, d)),
            "ddt_row": best_of(repeat, lambda: impl.ddt_row_counts(table, 1, 0, fs.order, out)),
            "value_counts": best_of(repeat, lambda: impl.value_counts(table, 0, fs.order, out)),
        }
    return rows


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n", type=int, nargs="+", default=[12, 16, 20])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    print(f"active backend: {kernels.BACKEND}")
    print(f"{'n':>3} {'kernel':<13} " + " ".join(f"{b:>12}" for b in kernels.backends()))
    for n in args.n:
        rows = bench(n, args.repeat)
        for kernel in next(iter(rows.values())):
            cells = " ".join(f"{rows[b][kernel] * 1000:>10.2f}ms" for b in rows)
            print(f"{n:>3} {kernel:<13} {cells}")


if __name__ == "__main__":
    main()
