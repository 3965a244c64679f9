# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled kernels.

Mirrors ``_pykernels``: trivial-automorphism test by refinement and
individualization, Gray-code scan of a switching class, and subset marking
for the regular-orbit bitmap.  Partition traces are compared by 64-bit hash;
a collision can only cause extra search work, since every leaf is verified.
"""

from libc.stdint cimport uint64_t
from libc.string cimport memcpy

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil

BACKEND = "cython"

cdef enum:
    MAXN = 64

ctypedef struct Part:
    int col[MAXN]
    int ncol
    uint64_t trace


cdef inline uint64_t _mix(uint64_t h, uint64_t x) noexcept nogil:
    h ^= x * 0x9E3779B97F4A7C15ULL
    h *= 0x100000001B3ULL
    return h ^ (h >> 29)


cdef inline int _cmp(const int* a, const int* b, int m) noexcept nogil:
    cdef int i
    for i in range(m):
        if a[i] != b[i]:
            return -1 if a[i] < b[i] else 1
    return 0


cdef void _refine(const uint64_t* adj, int n, Part* p) noexcept nogil:
    cdef int sig[MAXN][MAXN + 1]
    cdef int order[MAXN]
    cdef int newcol[MAXN]
    cdef int remap[2 * MAXN + 2]
    cdef uint64_t cell[MAXN]
    cdef int v, c, i, j, t, k, nc, maxc
    cdef uint64_t h

    maxc = 0
    for v in range(n):
        if p.col[v] > maxc:
            maxc = p.col[v]
    for c in range(maxc + 1):
        remap[c] = -1
    for v in range(n):
        remap[p.col[v]] = 0
    k = 0
    for c in range(maxc + 1):
        if remap[c] == 0:
            remap[c] = k
            k += 1
    for v in range(n):
        p.col[v] = remap[p.col[v]]

    while True:
        for c in range(k):
            cell[c] = 0
        for v in range(n):
            cell[p.col[v]] |= (<uint64_t>1) << v
        for v in range(n):
            sig[v][0] = p.col[v]
            for c in range(k):
                sig[v][c + 1] = __builtin_popcountll(adj[v] & cell[c])
        for i in range(n):
            order[i] = i
        for i in range(1, n):
            t = order[i]
            j = i - 1
            while j >= 0 and _cmp(&sig[order[j]][0], &sig[t][0], k + 1) > 0:
                order[j + 1] = order[j]
                j -= 1
            order[j + 1] = t
        h = _mix(p.trace, <uint64_t>k)
        nc = 0
        for i in range(n):
            if i > 0 and _cmp(&sig[order[i - 1]][0], &sig[order[i]][0], k + 1) != 0:
                nc += 1
            newcol[order[i]] = nc
            for c in range(k + 1):
                h = _mix(h, <uint64_t>sig[order[i]][c])
        nc += 1
        p.trace = _mix(h, <uint64_t>nc)
        for v in range(n):
            p.col[v] = newcol[v]
        if nc == k:
            break
        k = nc
    p.ncol = k


cdef inline void _individualize(Part* p, int n, int v) noexcept nogil:
    cdef int u
    for u in range(n):
        p.col[u] = 2 * p.col[u] + (1 if u != v else 0)


cdef int _target(const Part* p, int n) noexcept nogil:
    cdef int size[MAXN]
    cdef int c, v
    for c in range(n):
        size[c] = 0
    for v in range(n):
        size[p.col[v]] += 1
    for c in range(n):
        if size[c] > 1:
            return c
    return -1


cdef bint _is_aut(const uint64_t* adj, int n, const int* perm) noexcept nogil:
    cdef int v
    cdef uint64_t r, img
    for v in range(n):
        r = adj[v]
        img = 0
        while r:
            img |= (<uint64_t>1) << perm[__builtin_ctzll(r)]
            r &= r - 1
        if img != adj[perm[v]]:
            return False
    return True


cdef bint _extend(const uint64_t* adj, int n, const Part* L, const Part* R) noexcept nogil:
    cdef Part lv
    cdef Part rw
    cdef int perm[MAXN]
    cdef int inv[MAXN]
    cdef int c, v, w, k
    c = _target(L, n)
    if c < 0:
        for w in range(n):
            inv[R.col[w]] = w
        for v in range(n):
            perm[v] = inv[L.col[v]]
        return _is_aut(adj, n, perm)
    v = 0
    while L.col[v] != c:
        v += 1
    memcpy(&lv, L, sizeof(Part))
    _individualize(&lv, n, v)
    _refine(adj, n, &lv)
    # the same vertex first: identity-like branches finish fastest
    for k in range(-1, n):
        if k < 0:
            if R.col[v] != c:
                continue
            w = v
        else:
            w = k
            if w == v or R.col[w] != c:
                continue
        memcpy(&rw, R, sizeof(Part))
        _individualize(&rw, n, w)
        _refine(adj, n, &rw)
        if rw.trace == lv.trace and rw.ncol == lv.ncol:
            if _extend(adj, n, &lv, &rw):
                return True
    return False


cdef bint _is_trivial(const uint64_t* adj, int n) noexcept nogil:
    cdef Part path[MAXN + 1]
    cdef Part r
    cdef int base[MAXN]
    cdef int depth, c, b, i, w, v
    for v in range(n):
        path[0].col[v] = 0
    path[0].trace = 0
    _refine(adj, n, &path[0])
    depth = 0
    while True:
        c = _target(&path[depth], n)
        if c < 0:
            break
        b = 0
        while path[depth].col[b] != c:
            b += 1
        base[depth] = b
        memcpy(&path[depth + 1], &path[depth], sizeof(Part))
        _individualize(&path[depth + 1], n, b)
        _refine(adj, n, &path[depth + 1])
        depth += 1
    for i in range(depth - 1, -1, -1):
        b = base[i]
        c = path[i].col[b]
        for w in range(n):
            if w == b or path[i].col[w] != c:
                continue
            memcpy(&r, &path[i], sizeof(Part))
            _individualize(&r, n, w)
            _refine(adj, n, &r)
            if r.trace == path[i + 1].trace and r.ncol == path[i + 1].ncol:
                if _extend(adj, n, &path[i + 1], &r):
                    return False
    return True


cdef int _load(rows, int n, uint64_t* adj) except -1:
    cdef int v
    if n < 1 or n > MAXN - 1:
        raise ValueError("graph size must be in 1..63")
    for v in range(n):
        adj[v] = <uint64_t>rows[v]
    return 0


def is_trivial(rows, int n):
    """True iff the graph with the given rows has only the identity automorphism."""
    cdef uint64_t adj[MAXN]
    cdef bint res
    _load(rows, n, adj)
    with nogil:
        res = _is_trivial(adj, n)
    return bool(res)


cdef void _switch(uint64_t* adj, int n, uint64_t x) noexcept nogil:
    cdef int v
    cdef uint64_t full = ((<uint64_t>1) << n) - 1
    for v in range(n):
        if (x >> v) & 1:
            adj[v] ^= full & ~x
        else:
            adj[v] ^= x


def switch_rows(rows, int n, x):
    cdef uint64_t adj[MAXN]
    _load(rows, n, adj)
    _switch(adj, n, <uint64_t>x)
    return [adj[v] for v in range(n)]


def scan_range(rows, int n, long long start, long long stop):
    """Scan Gray-code indices [start, stop) of the switching class of ``rows``.

    Returns ``(index, scanned)``; index is the first position whose graph has
    trivial automorphism group, or -1.
    """
    cdef uint64_t adj[MAXN]
    cdef uint64_t full, bit
    cdef long long i
    cdef int v, u
    cdef long long found = -1
    if start >= stop:
        return -1, 0
    _load(rows, n, adj)
    full = ((<uint64_t>1) << n) - 1
    _switch(adj, n, <uint64_t>(start ^ (start >> 1)))
    i = start
    with nogil:
        while True:
            if _is_trivial(adj, n):
                found = i
                break
            i += 1
            if i >= stop:
                break
            v = __builtin_ctzll(<unsigned long long>i)
            bit = (<uint64_t>1) << v
            adj[v] ^= full ^ bit
            for u in range(n):
                if u != v:
                    adj[u] ^= bit
    if found >= 0:
        return found, found - start + 1
    return -1, stop - start


def mark_subsets(unsigned char[:] bitmap, masks):
    """Set the bit of every union of the given disjoint masks in ``bitmap``."""
    cdef uint64_t m[MAXN]
    cdef int k = len(masks)
    cdef int j
    cdef unsigned long long i, total
    cdef uint64_t cur = 0
    if k > MAXN - 1:
        raise ValueError("too many cycles")
    for j in range(k):
        m[j] = <uint64_t>masks[j]
    total = (<unsigned long long>1) << k
    with nogil:
        bitmap[0] |= 1
        for i in range(1, total):
            cur ^= m[__builtin_ctzll(i)]
            bitmap[cur >> 3] |= <unsigned char>(1 << (cur & 7))
