"""Benchmark: pure vs compiled enumeration kernel.

Times ``atoms(q, n, a)`` on a ladder of instance sizes with both
kernels (when the compiled one is available) and prints a table with
the speedup.  The two kernels are asserted to agree on every timed
instance, so the benchmark doubles as a consistency check.

Run from the repository root::

    python benchmarks/bench_enum.py
"""

import time

from cyclotwist import _enum_py

try:
    from cyclotwist import _enumspeed
except ImportError:
    _enumspeed = None

INSTANCES = [
    (3, 2, 1),  # 81 vectors
    (3, 3, 1),  # 6561
    (5, 2, 2),  # 625
    (5, 3, 1),  # 390625
    (7, 2, 3),  # 2401
    (11, 2, 5),  # 14641
]


def timed(fn, q, n, a, repeat=3):
    best, result = float("inf"), None
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn(q, n, a)
        best = min(best, time.perf_counter() - start)
    return best, result


def main():
    if _enumspeed is None:
        print("compiled kernel not built; timing the pure kernel only\n")
    header = f"{'instance':>16} {'vectors':>9} {'pure':>10}"
    if _enumspeed is not None:
        header += f" {'compiled':>10} {'speedup':>8}"
    print(header)
    for q, n, a in INSTANCES:
        vectors = q ** (1 << n)
        t_pure, atoms_pure = timed(_enum_py.atoms, q, n, a)
        row = f"{f'q={q} n={n} a={a}':>16} {vectors:>9} {t_pure:>9.4f}s"
        if _enumspeed is not None:
            t_fast, atoms_fast = timed(_enumspeed.atoms, q, n, a)
            assert atoms_pure == atoms_fast, "kernels disagree"
            row += f" {t_fast:>9.4f}s {t_pure / t_fast:>7.1f}x"
        print(row)


if __name__ == "__main__":
    main()
