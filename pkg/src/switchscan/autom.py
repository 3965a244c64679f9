"""Automorphism groups of graphs and 3-uniform hypergraphs.

Backtracking over ordered partitions.  A partition is refined to a stable
colouring by an isomorphism-invariant signature; the search individualizes
one vertex of the first non-singleton cell at a time.  Leaves are always
checked against the structure, so refinement only prunes.

Full groups are computed along a fixed base path.  Levels are processed from
the deepest up, so generators found lower down already prune the orbit at
each level.  The generators found form a strong generating set for that base.
"""

from __future__ import annotations

from collections import Counter

from . import _kernels
from .graphs import Graph
from .perm import Permutation, PermGroup
from .subsets import bits, triple_rank
from .twograph import TripleSet


class _GraphStructure:
    def __init__(self, g: Graph):
        self.n = g.n
        self.rows = g.rows

    def signatures(self, col, k):
        masks = [0] * k
        for v, c in enumerate(col):
            masks[c] |= 1 << v
        return [(col[v],) + tuple((r & m).bit_count() for m in masks)
                for v, r in enumerate(self.rows)]

    def maps_to(self, img, other) -> bool:
        rows = other.rows
        for u, r in enumerate(self.rows):
            m = 0
            for v in bits(r):
                m |= 1 << img[v]
            if m != rows[img[u]]:
                return False
        return True


class _HyperStructure:
    """Triple systems; refinement uses pair-degrees and the colours of triples."""

    def __init__(self, t: TripleSet):
        self.n = n = t.n
        self.bits = t.bits
        self.triples = t.triples()
        self.through = [[] for _ in range(n)]
        pd = [[0] * n for _ in range(n)]
        for a, b, c in self.triples:
            self.through[a].append((b, c))
            self.through[b].append((a, c))
            self.through[c].append((a, b))
            pd[a][b] += 1
            pd[b][a] += 1
            pd[a][c] += 1
            pd[c][a] += 1
            pd[b][c] += 1
            pd[c][b] += 1
        self.pair_degree = pd

    def signatures(self, col, k):
        out = []
        for v in range(self.n):
            pdv = self.pair_degree[v]
            pairs = Counter((col[u], pdv[u]) for u in range(self.n) if u != v)
            tris = Counter((col[a], col[b]) if col[a] <= col[b] else (col[b], col[a])
                           for a, b in self.through[v])
            out.append((col[v], tuple(sorted(pairs.items())), tuple(sorted(tris.items()))))
        return out

    def maps_to(self, img, other) -> bool:
        target = other.bits
        for a, b, c in self.triples:
            if not (target >> triple_rank(img[a], img[b], img[c])) & 1:
                return False
        return True


def _refine(s, col, trace):
    vals = sorted(set(col))
    if vals[-1] != len(vals) - 1:
        idx = {v: i for i, v in enumerate(vals)}
        col = [idx[c] for c in col]
    k = len(vals)
    while True:
        sigs = s.signatures(col, k)
        distinct = sorted(set(sigs))
        trace = trace + (tuple(sorted(sigs)),)
        if len(distinct) == k:
            return col, trace
        rank = {x: i for i, x in enumerate(distinct)}
        col = [rank[x] for x in sigs]
        k = len(distinct)


def _individualize(col, v):
    return [2 * c + (u != v) for u, c in enumerate(col)]


def _target_cell(col):
    size = Counter(col)
    for c in range(len(col)):
        if size.get(c, 0) > 1:
            return c
    return -1


def _extend(sl, sr, left, lt, right, rt):
    """An isomorphism sl -> sr respecting the two (equal-trace) colourings, or None."""
    c = _target_cell(left)
    n = len(left)
    if c < 0:
        inv = [0] * n
        for w, cw in enumerate(right):
            inv[cw] = w
        img = [inv[cv] for cv in left]
        return img if sl.maps_to(img, sr) else None
    v = left.index(c)
    lv, ltv = _refine(sl, _individualize(left, v), lt)
    cands = [w for w in range(n) if right[w] == c]
    if right[v] == c:
        cands.remove(v)
        cands.insert(0, v)
    for w in cands:
        rw, rtw = _refine(sr, _individualize(right, w), rt)
        if rtw != ltv:
            continue
        img = _extend(sl, sr, lv, ltv, rw, rtw)
        if img is not None:
            return img
    return None


def _base_path(s, colors):
    col, tr = _refine(s, list(colors), ())
    path = [(col, tr)]
    base = []
    while True:
        col, tr = path[-1]
        c = _target_cell(col)
        if c < 0:
            return path, base
        b = col.index(c)
        base.append(b)
        path.append(_refine(s, _individualize(col, b), tr))


def _orbit_under(point, gens):
    seen = {point}
    queue = [point]
    for p in queue:
        for g in gens:
            q = g[p]
            if q not in seen:
                seen.add(q)
                queue.append(q)
    return seen


def _automorphisms(s, colors=None, *, first_only=False):
    n = s.n
    path, base = _base_path(s, colors if colors is not None else [0] * n)
    gens: list[list[int]] = []
    for i in range(len(base) - 1, -1, -1):
        col, tr = path[i]
        nxt, ntr = path[i + 1]
        b = base[i]
        orb = _orbit_under(b, gens)
        for w in range(n):
            if col[w] != col[b] or w in orb:
                continue
            rw, rtr = _refine(s, _individualize(col, w), tr)
            if rtr != ntr:
                continue
            img = _extend(s, s, nxt, ntr, rw, rtr)
            if img is not None:
                gens.append(img)
                if first_only:
                    return base, gens
                orb = _orbit_under(b, gens)
    return base, gens


def _group(s, colors=None) -> PermGroup:
    base, gens = _automorphisms(s, colors)
    for g in gens:
        if not s.maps_to(g, s):
            raise AssertionError("search returned a non-automorphism")
    n = s.n
    perms = [Permutation._trusted(tuple(g)) for g in gens]
    return PermGroup.from_strong_generators(n, base, perms)


def graph_aut(g: Graph, colors=None) -> PermGroup:
    """Full automorphism group of g, optionally preserving a vertex colouring."""
    return _group(_GraphStructure(g), colors)


def hypergraph_aut(t: TripleSet) -> PermGroup:
    """Full automorphism group of a 3-uniform hypergraph."""
    return _group(_HyperStructure(t))


def has_trivial_aut(g: Graph) -> bool:
    """Early-exit test for |Aut(g)| = 1; never builds a group."""
    return _kernels.is_trivial(list(g.rows), g.n)


def hypergraph_has_trivial_aut(t: TripleSet) -> bool:
    _, gens = _automorphisms(_HyperStructure(t), first_only=True)
    return not gens


def _isomorphism(sa, sb):
    if sa.n != sb.n:
        return None
    n = sa.n
    la, lt = _refine(sa, [0] * n, ())
    rb, rt = _refine(sb, [0] * n, ())
    if lt != rt:
        return None
    img = _extend(sa, sb, la, lt, rb, rt)
    return None if img is None else Permutation._trusted(tuple(img))


def find_graph_isomorphism(g: Graph, h: Graph) -> Permutation | None:
    """A permutation p with g.permuted(p) == h, or None."""
    return _isomorphism(_GraphStructure(g), _GraphStructure(h))


def find_hypergraph_isomorphism(a: TripleSet, b: TripleSet) -> Permutation | None:
    if len(a) != len(b):
        return None
    return _isomorphism(_HyperStructure(a), _HyperStructure(b))


def preserves(t: TripleSet, p) -> bool:
    img = p.images if hasattr(p, "images") else p
    return t.permuted(img).bits == t.bits


def is_full_group(t: TripleSet, G: PermGroup) -> bool:
    """True iff G is the whole automorphism group of the G-invariant triple set t."""
    if t.n != G.degree:
        raise ValueError("degree mismatch")
    for g in G.generators:
        if not preserves(t, g):
            raise ValueError("triple set is not invariant under the group")
    return hypergraph_aut(t).order == G.order


def partition_stabilizer_order(G: PermGroup, x_mask: int) -> int:
    """Order of the stabiliser in G of the partition {X, complement of X}."""
    n = G.degree
    full = (1 << n) - 1
    count = 0
    for g in G.elements():
        img = 0
        for v in bits(x_mask):
            img |= 1 << g.images[v]
        if img == x_mask or img == full ^ x_mask:
            count += 1
    return count


def isomorphism_type_counts(graphs) -> list[int]:
    """Sizes of the isomorphism classes among the given graphs, ascending."""
    reps: list[Graph] = []
    counts: list[int] = []
    for g in graphs:
        for i, h in enumerate(reps):
            if find_graph_isomorphism(g, h) is not None:
                counts[i] += 1
                break
        else:
            reps.append(g)
            counts.append(1)
    return sorted(counts)
