"""Compare the numba and numpy kernel paths on oracle-sized workloads.

    python3 benchmarks/bench_kernels.py [--repeat 3]

Both paths run in this one process: the numba functions are called
directly, the numpy ones through their ``_np`` / ``_py`` names. Results
are checked for equality before timings are printed.
"""

from __future__ import annotations

import argparse
import random
import time

import numpy as np

from proxenum import _kernels
from proxenum.graph import Graph, tables_for
from proxenum.recognition import FORBIDDEN


def _random_graph(rnd: random.Random, n: int, p: float) -> Graph:
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rnd.random() < p])


def _best(fn, repeat: int) -> tuple[float, object]:
    best = float("inf")
    out = None
    for _ in range(repeat):
        start = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - start)
    return best, out


def bench_edge_scan(repeat: int) -> list[tuple]:
    rows = []
    rnd = random.Random(0)
    for m in (10, 12, 14):
        g = _random_graph(rnd, 7, 0.7)
        edges = g.edges()[:m]
        eu = np.array([e[0] for e in edges], dtype=np.int64)
        ev = np.array([e[1] for e in edges], dtype=np.int64)
        for cls in ("cograph", "split", "tp"):
            t = tables_for(FORBIDDEN[cls])
            np_time, ref = _best(lambda: _kernels._scan_np([], eu, ev, g.n, *t), repeat)
            entry = [f"edge scan n=7 m={len(edges)} {cls}", np_time, None]
            if _kernels.HAS_NUMBA:
                base = np.zeros(g.n, dtype=np.uint64)
                _kernels._scan_nb(base, eu, ev, g.n, *t)  # compile outside the timing
                nb_time, got = _best(lambda: _kernels._scan_nb(base, eu, ev, g.n, *t), repeat)
                assert np.array_equal(got, ref)
                entry[2] = nb_time
            rows.append(tuple(entry))
    return rows


def bench_first_match(repeat: int) -> list[tuple]:
    rnd = random.Random(1)
    graphs = [_random_graph(rnd, n, 0.5) for n in (8, 12, 16, 20) for _ in range(25)]
    out = []
    for cls in ("cograph", "split"):
        t = tables_for(FORBIDDEN[cls])
        py_time, ref = _best(lambda: [_kernels._first_match_py(g.rows, g.n, *t) for g in graphs], repeat)
        entry = [f"pattern search x{len(graphs)} {cls}", py_time, None]
        if _kernels.HAS_NUMBA:
            nb_time, got = _best(lambda: [_kernels.first_match(g.rows, g.n, t) for g in graphs], repeat)
            assert got == ref
            entry[2] = nb_time
        out.append(tuple(entry))
    return out


def bench_maximal(repeat: int) -> list[tuple]:
    rng = np.random.default_rng(2)
    out = []
    for m in (14, 18):
        ok = rng.random(1 << m) < 0.1
        np_time, ref = _best(lambda: _kernels._maximal_np(ok), repeat)
        entry = [f"maximal filter 2^{m}", np_time, None]
        if _kernels.HAS_NUMBA:
            _kernels._maximal_nb(ok[:2])
            nb_time, got = _best(lambda: _kernels._maximal_nb(ok), repeat)
            assert np.array_equal(got, ref)
            entry[2] = nb_time
        out.append(tuple(entry))
    return out


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    print(f"backend available: {_kernels.BACKEND}")
    print(f"{'workload':40s} {'numpy (s)':>10s} {'numba (s)':>10s} {'speedup':>8s}")
    for name, np_time, nb_time in bench_edge_scan(args.repeat) + bench_first_match(args.repeat) + bench_maximal(args.repeat):
        if nb_time is None:
            print(f"{name:40s} {np_time:10.4f} {'-':>10s} {'-':>8s}")
        else:
            print(f"{name:40s} {np_time:10.4f} {nb_time:10.4f} {np_time / nb_time:8.1f}")


if __name__ == "__main__":
    main()
