from __future__ import annotations

import random

import pytest

from switchscan import _pykernels as py
from switchscan import _kernels
from switchscan.autom import graph_aut
from switchscan.graphs import Graph, gray_subset, switch

c = pytest.importorskip("switchscan._ckernels")


def random_rows(rng, n, p):
    return list(Graph.from_edges(n, [(u, v) for v in range(n) for u in range(v) if rng.random() < p]).rows)


def test_backend_selected():
    assert _kernels.BACKEND in ("cython", "python")
    assert c.BACKEND == "cython" and py.BACKEND == "python"


def test_is_trivial_agrees():
    rng = random.Random(7)
    for _ in range(400):
        n = rng.randint(1, 14)
        rows = random_rows(rng, n, rng.random())
        expect = graph_aut(Graph(n, tuple(rows))).order == 1
        assert c.is_trivial(rows, n) == py.is_trivial(rows, n) == expect


def test_switch_rows_agrees():
    rng = random.Random(8)
    for _ in range(200):
        n = rng.randint(2, 40)
        rows = random_rows(rng, n, 0.5)
        x = rng.getrandbits(n)
        expect = list(switch(Graph(n, tuple(rows)), x).rows)
        assert list(c.switch_rows(rows, n, x)) == list(py.switch_rows(rows, n, x)) == expect


def test_scan_range_agrees():
    rng = random.Random(9)
    for _ in range(60):
        n = rng.randint(3, 11)
        rows = random_rows(rng, n, rng.random())
        rows = list(switch(Graph(n, tuple(rows)), rows[n - 1]).rows)  # isolate the last vertex
        total = 1 << (n - 1)
        a = rng.randrange(total)
        b = rng.randint(a, total)
        assert tuple(c.scan_range(rows, n, a, b)) == tuple(py.scan_range(rows, n, a, b))
        idx, _ = py.scan_range(rows, n, a, b)
        if idx >= 0:
            g = switch(Graph(n, tuple(rows)), gray_subset(idx))
            assert graph_aut(g).order == 1


def test_mark_subsets_agrees():
    rng = random.Random(10)
    for _ in range(50):
        n = rng.randint(3, 12)
        pts = list(range(n))
        rng.shuffle(pts)
        cuts = sorted(rng.sample(range(1, n), rng.randint(0, n - 1)))
        parts = [pts[i:j] for i, j in zip([0] + cuts, cuts + [n])]
        masks = [sum(1 << v for v in p) for p in parts]
        b1 = bytearray(max(1, (1 << n) // 8))
        b2 = bytearray(max(1, (1 << n) // 8))
        c.mark_subsets(b1, masks)
        py.mark_subsets(b2, masks)
        assert b1 == b2
        marked = {x for x in range(1 << n) if (b1[x >> 3] >> (x & 7)) & 1}
        assert marked == {sum(masks[i] for i in range(len(masks)) if (s >> i) & 1) for s in range(1 << len(masks))}


def test_pure_fallback_forced_by_env():
    import os
    import subprocess
    import sys
    env = dict(os.environ, SWITCHSCAN_PURE="1")
    out = subprocess.run([sys.executable, "-c", "from switchscan import _kernels; print(_kernels.BACKEND)"],
                         env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"
