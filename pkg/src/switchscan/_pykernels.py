"""Pure-Python versions of the hot kernels.

Same entry points and results as the compiled ``_ckernels`` module.  Graphs
are passed as a list of row bitmasks.
"""

from __future__ import annotations

BACKEND = "python"


def _refine(rows, n, col, trace):
    vals = sorted(set(col))
    if vals[-1] != len(vals) - 1:
        idx = {v: i for i, v in enumerate(vals)}
        col = [idx[c] for c in col]
    k = len(vals)
    while True:
        masks = [0] * k
        for v in range(n):
            masks[col[v]] |= 1 << v
        sigs = [(col[v],) + tuple((rows[v] & m).bit_count() for m in masks) for v in range(n)]
        distinct = sorted(set(sigs))
        trace = trace + (tuple(sorted(sigs)),)
        if len(distinct) == k:
            return col, trace
        rank = {s: i for i, s in enumerate(distinct)}
        col = [rank[s] for s in sigs]
        k = len(distinct)


def _individualize(col, v):
    return [2 * c + (u != v) for u, c in enumerate(col)]


def _target(col, n):
    size = [0] * n
    for c in col:
        size[c] += 1
    for c in range(n):
        if size[c] > 1:
            return c
    return -1


def _is_aut(rows, n, perm):
    for v in range(n):
        img = 0
        r = rows[v]
        while r:
            low = r & -r
            img |= 1 << perm[low.bit_length() - 1]
            r ^= low
        if img != rows[perm[v]]:
            return False
    return True


def _extend(rows, n, left, lt, right, rt):
    c = _target(left, n)
    if c < 0:
        inv = [0] * n
        for w in range(n):
            inv[right[w]] = w
        return _is_aut(rows, n, [inv[left[v]] for v in range(n)])
    v = left.index(c)
    lv, ltv = _refine(rows, n, _individualize(left, v), lt)
    cands = [w for w in range(n) if right[w] == c]
    if right[v] == c:
        cands.remove(v)
        cands.insert(0, v)
    for w in cands:
        rw, rtw = _refine(rows, n, _individualize(right, w), rt)
        if rtw == ltv and _extend(rows, n, lv, ltv, rw, rtw):
            return True
    return False


def is_trivial(rows, n):
    """True iff the graph with the given rows has only the identity automorphism."""
    rows = list(rows)
    col, tr = _refine(rows, n, [0] * n, ())
    path = [(col, tr)]
    base = []
    while True:
        col, tr = path[-1]
        c = _target(col, n)
        if c < 0:
            break
        b = col.index(c)
        base.append(b)
        path.append(_refine(rows, n, _individualize(col, b), tr))
    for i in range(len(base) - 1, -1, -1):
        col, tr = path[i]
        b = base[i]
        nxt, ntr = path[i + 1]
        for w in range(n):
            if w == b or col[w] != col[b]:
                continue
            rw, rtr = _refine(rows, n, _individualize(col, w), tr)
            if rtr == ntr and _extend(rows, n, nxt, ntr, rw, rtr):
                return False
    return True


def switch_rows(rows, n, x):
    full = (1 << n) - 1
    out = []
    for v in range(n):
        if (x >> v) & 1:
            out.append(rows[v] ^ (full & ~x))
        else:
            out.append(rows[v] ^ x)
    return out


def scan_range(rows, n, start, stop):
    """Scan Gray-code indices [start, stop) of the switching class of ``rows``.

    Returns ``(index, scanned)``; index is the first position whose graph has
    trivial automorphism group, or -1.
    """
    if start >= stop:
        return -1, 0
    cur = switch_rows(rows, n, start ^ (start >> 1))
    full = (1 << n) - 1
    i = start
    while True:
        if is_trivial(cur, n):
            return i, i - start + 1
        i += 1
        if i >= stop:
            return -1, stop - start
        v = (i & -i).bit_length() - 1
        bit = 1 << v
        cur[v] ^= full ^ bit
        for u in range(n):
            if u != v:
                cur[u] ^= bit


def mark_subsets(bitmap, masks):
    """Set the bit of every union of the given disjoint masks in ``bitmap``."""
    cur = 0
    bitmap[0] |= 1
    for i in range(1, 1 << len(masks)):
        cur ^= masks[(i & -i).bit_length() - 1]
        bitmap[cur >> 3] |= 1 << (cur & 7)
