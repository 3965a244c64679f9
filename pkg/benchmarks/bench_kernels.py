"""Compare the compiled and pure-Python kernels on the hot paths.

    python3 benchmarks/bench_kernels.py [--repeat N]
"""

from __future__ import annotations

import argparse
import random
import time

from switchscan import _pykernels
from switchscan.catalog import catalog_group, paley_two_graph, symplectic_two_graph_16
from switchscan.counting import _prime_order_partitions
from switchscan.graphs import Graph, class_size, isolated_vertex_representative

try:
    from switchscan import _ckernels
except ImportError:
    _ckernels = None


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def workloads():
    rng = random.Random(0)
    graphs = []
    for _ in range(2000):
        n = rng.randint(8, 20)
        graphs.append((list(Graph.from_edges(n, [(u, v) for v in range(n) for u in range(v)
                                                 if rng.random() < 0.5]).rows), n))

    def is_trivial(k):
        return lambda: [k.is_trivial(r, n) for r, n in graphs]

    sym = symplectic_two_graph_16()
    sym_rows = list(isolated_vertex_representative(sym).rows)

    def scan_symplectic(k):
        return lambda: k.scan_range(sym_rows, 16, 0, class_size(16))

    p13 = list(isolated_vertex_representative(paley_two_graph(13)).rows)

    def scan_paley13(k):
        return lambda: k.scan_range(p13, 14, 0, class_size(14))

    parts = _prime_order_partitions(catalog_group("psl_2_13"))

    def mark(k):
        def run():
            bm = bytearray(2**14 // 8)
            for m in parts:
                k.mark_subsets(bm, m)
        return run

    return [
        ("is_trivial x2000 random graphs", is_trivial),
        ("scan symplectic class (32768)", scan_symplectic),
        ("scan Paley-13 class (8192)", scan_paley13),
        ("mark subsets, PSL(2,13)", mark),
    ]


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    if _ckernels is None:
        print("compiled kernels not built; only the Python timings are shown")
    print(f"{'workload':36} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    for name, make in workloads():
        tp = best_of(make(_pykernels), args.repeat)
        if _ckernels is None:
            print(f"{name:36} {tp:10.4f} {'-':>10} {'-':>8}")
            continue
        tc = best_of(make(_ckernels), args.repeat)
        print(f"{name:36} {tp:10.4f} {tc:10.4f} {tp / tc:7.1f}x")


if __name__ == "__main__":
    main()
