"""Benchmark: compiled vs pure-Python quadruple-scan kernel.

Both kernels compute the max four-point defect of a scaled integer
distance matrix; the scan is Theta(n^4), which is the hot loop of
four_point_delta.  Run:

    python3 benchmarks/bench_delta.py [--sizes 24 32 48] [--repeat 3]
"""

from __future__ import annotations

import argparse
import random
import time

import numpy as np

from cremlat import FiniteMetric, grid_graph
from cremlat.hypgraph import COMPILED_DELTA, _scaled_int_matrix
from cremlat import _delta_py

if COMPILED_DELTA:
    from cremlat import _delta_cy


def random_metric(n: int, rng: random.Random) -> FiniteMetric:
    """Random integer metric: perturbed star distances keep the triangle law."""
    weights = [rng.randint(50, 100) for _ in range(n)]
    matrix = [
        [0 if i == j else weights[i] + weights[j] - rng.randint(0, 40) for j in range(n)]
        for i in range(n)
    ]
    for i in range(n):
        for j in range(i):
            matrix[i][j] = matrix[j][i]
    return FiniteMetric(matrix)


def best_of(fn, repeat: int) -> float:
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return min(times)


def bench(label: str, metric: FiniteMetric, repeat: int) -> None:
    ints, _ = _scaled_int_matrix(metric.matrix)
    pure = best_of(lambda: _delta_py.max_defect(ints), repeat)
    line = f"{label:>14}  n={metric.size:>3}  pure {pure * 1e3:9.2f} ms"
    if COMPILED_DELTA:
        arr = np.array(ints, dtype=np.int64)
        compiled = best_of(lambda: _delta_cy.max_defect(arr), repeat)
        assert int(_delta_cy.max_defect(arr)) == _delta_py.max_defect(ints)
        line += f"  compiled {compiled * 1e3:9.2f} ms  speedup {pure / compiled:7.1f}x"
    else:
        line += "  (compiled kernel not built)"
    print(line)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--sizes", type=int, nargs="*", default=[24, 32, 48])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    rng = random.Random(20240817)
    print(f"kernel backends: pure-python{' + compiled' if COMPILED_DELTA else ' only'}")
    bench("grid 8x8", FiniteMetric.from_graph(grid_graph(8, 8)), args.repeat)
    for n in args.sizes:
        bench("random", random_metric(n, rng), args.repeat)


if __name__ == "__main__":
    main()
