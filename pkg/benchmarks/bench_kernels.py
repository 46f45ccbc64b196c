#!/usr/bin/env python3
"""Benchmark the compiled linear-algebra kernels against the pure fallback.

Covers the three shapes the oracle actually produces: dense modular
elimination (the rank certificate), fraction-free elimination on dense
integer matrices, and the sparse 0/1 multiplication-by-x_n matrices that
dominate the fuzz suites.

Run:  python3 benchmarks/bench_kernels.py
"""

import random
import time

from lefschetz import LinearForm, Monomial, Ring, hilbert_function, minimalize, mult_matrix
from lefschetz._kernels import _pure

try:
    from lefschetz._kernels import _core
except ImportError:
    _core = None

CERT_PRIME = 2147483629


def timed(fn, *args, repeat=3):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return result, best


def bench(name, func_name, *args):
    pure_fn = getattr(_pure, func_name)
    expected, pure_t = timed(pure_fn, *args)
    if _core is None:
        print(f"{name:<44} pure {pure_t * 1e3:8.2f} ms   (compiled core not built)")
        return
    got, core_t = timed(getattr(_core, func_name), *args)
    assert got == expected, f"{name}: compiled={got} pure={expected}"
    speedup = pure_t / core_t if core_t else float("inf")
    print(
        f"{name:<44} pure {pure_t * 1e3:8.2f} ms   compiled {core_t * 1e3:8.2f} ms"
        f"   x{speedup:6.1f}"
    )


def random_matrix(rng, rows, cols, lo, hi):
    return [[rng.randint(lo, hi) for _ in range(cols)] for _ in range(rows)]


def main():
    rng = random.Random(20240915)
    print(f"compiled core available: {_core is not None}\n")

    for size in (40, 80, 120):
        rows = random_matrix(rng, size, size, -(10**6), 10**6)
        bench(f"rank_mod_p dense {size}x{size}", "rank_mod_p", rows, CERT_PRIME)

    for size in (12, 20, 28):
        rows = random_matrix(rng, size, size, -9, 9)
        bench(f"rank_bareiss dense {size}x{size}", "rank_bareiss", rows)

    for size in (12, 20):
        rows = random_matrix(rng, size, size, -9, 9)
        bench(f"det_bareiss dense {size}x{size}", "det_bareiss", rows)

    # application-shaped input: multiplication maps on K[x1..x5]/(x1^3,...,x5^3)
    ring = Ring(5)
    cubes = minimalize(
        [Monomial(tuple(3 if t == i else 0 for t in range(5))) for i in range(5)], ring
    )
    mid = hilbert_function(cubes).socle_degree // 2
    xn = mult_matrix(cubes, LinearForm.variable(5, 5), mid, 1)
    bench(
        f"rank_mod_p x_n map {len(xn)}x{len(xn[0])}",
        "rank_mod_p", xn, CERT_PRIME,
    )
    bench(f"rank_bareiss x_n map {len(xn)}x{len(xn[0])}", "rank_bareiss", xn)
    dense = mult_matrix(cubes, LinearForm((3, 1, 4, 1, 5)), mid, 1)
    bench(
        f"rank_mod_p general form {len(dense)}x{len(dense[0])}",
        "rank_mod_p", dense, CERT_PRIME,
    )


if __name__ == "__main__":
    main()
