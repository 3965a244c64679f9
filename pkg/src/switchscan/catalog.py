"""Named permutation groups and two-graphs.

Projective lines put the field elements at 0..q-1 and the point at infinity
at q.  Affine spaces index a vector by its base-q digits (first coordinate
least significant).  Degree-10 pair actions use colex ranks of the 2-subsets
of {0..4}.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Callable

from ._field import field
from .graphs import Graph
from .perm import Permutation, PermGroup, orbits_on_triples
from .subsets import all_ksubsets, all_triples, subset_rank, triple_rank
from .twograph import TripleSet, TwoGraph, from_orbit_union, two_graph_of


def _perm(images) -> Permutation:
    return Permutation(tuple(images))


def _group(n: int, maps) -> PermGroup:
    return PermGroup(n, [_perm(m) for m in maps])


def _from_cycles1(n: int, *cycles) -> Permutation:
    """1-based cycle notation, as groups are usually printed."""
    return Permutation.from_cycles(n, [[x - 1 for x in c] for c in cycles])


# -- projective line --------------------------------------------------------

def _line_map(q: int, f: Callable[[int], int | None]) -> list[int]:
    """Images of the q+1 projective points under f; f returns None for infinity."""
    out = []
    for x in range(q + 1):
        y = f(x if x < q else None)
        out.append(q if y is None else y)
    return out


def _mobius(F, a, b, c, d):
    """x -> (a x + b) / (c x + d)."""
    q = F.q

    def f(x):
        if x is None:
            return None if c == 0 else F.mul[a][F.inv[c]]
        num = F.add[F.mul[a][x]][b]
        den = F.add[F.mul[c][x]][d]
        if den == 0:
            return None
        return F.mul[num][F.inv[den]]

    return _line_map(q, f)


def _frobenius_line(F, k=1):
    def f(x):
        if x is None:
            return None
        for _ in range(k):
            x = F.frobenius(x)
        return x
    return _line_map(F.q, f)


def projective_line_group(q: int, kind: str) -> PermGroup:
    """PSL, PGL, PSigmaL or PGammaL(2,q) on q+1 points."""
    F = field(q)
    a = F.primitive
    one, zero = 1, 0
    minus_one = F.neg[1]
    gens = [_mobius(F, one, one, zero, one), _mobius(F, zero, minus_one, one, zero)]
    if kind in ("psl", "psigmal"):
        gens.append(_mobius(F, F.mul[a][a], zero, zero, one))
    elif kind in ("pgl", "pgammal"):
        gens.append(_mobius(F, a, zero, zero, one))
    else:
        raise ValueError(kind)
    if kind in ("psigmal", "pgammal") and F.k > 1:
        gens.append(_frobenius_line(F))
    return _group(q + 1, gens)


def m10() -> PermGroup:
    """PSL(2,9) extended by x -> a x^3 with a a non-square."""
    F = field(9)
    a = F.primitive
    twist = _line_map(9, lambda x: None if x is None else F.mul[a][F.frobenius(x)])
    G = projective_line_group(9, "psl")
    return PermGroup(10, list(G.generators) + [_perm(twist)])


def psl_2_16_2() -> PermGroup:
    F = field(16)
    G = projective_line_group(16, "psl")
    return PermGroup(17, list(G.generators) + [_perm(_frobenius_line(F, 2))])


# -- affine and projective spaces -------------------------------------------

def _vectors(q: int, d: int) -> list[tuple[int, ...]]:
    return [tuple((i // q**j) % q for j in range(d)) for i in range(q**d)]


def _vindex(q: int, v) -> int:
    return sum(c * q**j for j, c in enumerate(v))


def _apply(F, mat, v):
    """Row vector times matrix."""
    d = len(v)
    out = []
    for j in range(d):
        s = 0
        for i in range(d):
            s = F.add[s][F.mul[v[i]][mat[i][j]]]
        out.append(s)
    return tuple(out)


def _gl_generators(F, d: int, special: bool = False) -> list[list[list[int]]]:
    """Elementary transvections plus a primitive-element diagonal (omitted for SL)."""
    gens = []
    for i in range(d):
        for j in range(d):
            if i != j:
                m = [[int(r == c) for c in range(d)] for r in range(d)]
                m[i][j] = 1
                gens.append(m)
                if F.k > 1:
                    m2 = [row[:] for row in m]
                    m2[i][j] = F.primitive
                    gens.append(m2)
    if not special and F.q > 2:
        m = [[int(r == c) for c in range(d)] for r in range(d)]
        m[0][0] = F.primitive
        gens.append(m)
    return gens


def affine_group(q: int, d: int, matrices=None, *, frobenius=False, special=False) -> PermGroup:
    """Translations of GF(q)^d extended by the given matrices (default: GL or SL)."""
    F = field(q)
    vecs = _vectors(q, d)
    if matrices is None:
        matrices = _gl_generators(F, d, special)
    gens = []
    for i in range(d):
        e = tuple(int(j == i) for j in range(d))
        gens.append([_vindex(q, tuple(F.add[x][y] for x, y in zip(v, e))) for v in vecs])
    for m in matrices:
        gens.append([_vindex(q, _apply(F, m, v)) for v in vecs])
    if frobenius:
        gens.append([_vindex(q, tuple(F.frobenius(x) for x in v)) for v in vecs])
    return _group(q**d, gens)


def _projective_points(F, d: int) -> list[tuple[int, ...]]:
    pts = []
    for v in _vectors(F.q, d):
        nz = [x for x in v if x]
        if nz and nz[-1] == 1:
            pts.append(v)
    return pts


def _normalize(F, v):
    lead = next(x for x in reversed(v) if x)
    s = F.inv[lead]
    return tuple(F.mul[s][x] for x in v)


def projective_space_group(q: int, d: int, *, frobenius=False) -> PermGroup:
    """PGL(d,q) (with Frobenius: PGammaL) on the points of PG(d-1,q)."""
    F = field(q)
    pts = _projective_points(F, d)
    where = {p: i for i, p in enumerate(pts)}
    gens = []
    for m in _gl_generators(F, d):
        gens.append([where[_normalize(F, _apply(F, m, p))] for p in pts])
    if frobenius and F.k > 1:
        gens.append([where[_normalize(F, tuple(F.frobenius(x) for x in p))] for p in pts])
    return _group(len(pts), gens)


# -- binary symplectic and orthogonal forms on GF(2)^4 ----------------------

def symplectic_form(x: int, y: int) -> int:
    """B(x,y) = x1y2 + x2y1 + x3y4 + x4y3, bit i holding coordinate i+1."""
    s = ((x >> 0) & (y >> 1)) ^ ((x >> 1) & (y >> 0)) ^ ((x >> 2) & (y >> 3)) ^ ((x >> 3) & (y >> 2))
    return s & 1


def elliptic_quadric(x: int) -> int:
    """Q(x) = x1x2 + x3^2 + x3x4 + x4^2; its polar form is B."""
    x1, x2, x3, x4 = x & 1, (x >> 1) & 1, (x >> 2) & 1, (x >> 3) & 1
    return (x1 & x2) ^ x3 ^ (x3 & x4) ^ x4


def _transvection(v: int) -> list[int]:
    return [x ^ v if symplectic_form(x, v) else x for x in range(16)]


def _translations16() -> list[list[int]]:
    return [[x ^ (1 << i) for x in range(16)] for i in range(4)]


def affine_sp4_2() -> PermGroup:
    return _group(16, _translations16() + [_transvection(v) for v in range(1, 16)])


def so4minus_16() -> PermGroup:
    """Translations and the orthogonal reflections of the elliptic quadric."""
    refl = [_transvection(v) for v in range(1, 16) if elliptic_quadric(v)]
    return _group(16, _translations16() + refl)


def affine_a6_16() -> PermGroup:
    """2^4.A6: translations with the index-2 subgroup of Sp(4,2), built from transvection products."""
    ts = [_transvection(v) for v in range(1, 16)]
    prods = [[ts[0][x] for x in t] for t in ts[1:]]
    return _group(16, _translations16() + prods)


# matrices over GF(2) as four row bitmasks; found by a seeded search for a
# subgroup of GL(4,2) of order 2520 transitive on the nonzero vectors
_A7_IN_GL42 = ((5, 8, 6, 4), (4, 8, 11, 14))


def _binary_matrix_map(rows) -> list[int]:
    out = []
    for x in range(16):
        y = 0
        for i in range(4):
            if (x >> i) & 1:
                y ^= rows[i]
        out.append(y)
    return out


def affine_a7_16() -> PermGroup:
    return _group(16, _translations16() + [_binary_matrix_map(m) for m in _A7_IN_GL42])


# -- Mathieu groups and other small-degree groups ---------------------------

def m11() -> PermGroup:
    return PermGroup(11, [_from_cycles1(11, range(1, 12)),
                          _from_cycles1(11, (3, 7, 11, 8), (4, 10, 5, 6))])


def m12() -> PermGroup:
    gens = [_from_cycles1(12, range(1, 12)),
            _from_cycles1(12, (3, 7, 11, 8), (4, 10, 5, 6)),
            _from_cycles1(12, (1, 12), (2, 11), (3, 6), (4, 8), (5, 9), (7, 10))]
    return PermGroup(12, gens)


# 3-transitive M11 inside M12, found by a seeded search and frozen (1-based images)
_M11_ON_12 = ((5, 11, 12, 3, 10, 9, 8, 4, 2, 7, 6, 1), (10, 4, 11, 12, 3, 5, 9, 2, 6, 7, 1, 8))


def m11_on_12() -> PermGroup:
    return PermGroup(12, [_perm([x - 1 for x in g]) for g in _M11_ON_12])


def psl_2_11_on_11() -> PermGroup:
    """Automorphisms of the 11-point biplane with blocks {1,3,4,5,9} + i."""
    from .autom import graph_aut
    base = (1, 3, 4, 5, 9)
    edges = [(p, 11 + i) for i in range(11) for p in ((b + i) % 11 for b in base)]
    inc = Graph.from_edges(22, edges)
    A = graph_aut(inc, colors=[0] * 11 + [1] * 11)
    return PermGroup(11, [_perm(g.images[:11]) for g in A.generators])


def dihedral(n: int) -> PermGroup:
    return _group(n, [[(x + 1) % n for x in range(n)], [(-x) % n for x in range(n)]])


def affine_line(q: int, *, frobenius=False) -> PermGroup:
    return affine_group(q, 1, frobenius=frobenius)


def grid_group(m: int) -> PermGroup:
    """S_m wr S_2 in product action on the m x m grid, point (i,j) at index i*m + j."""
    n = m * m

    def on_rows(s):
        return [s[i] * m + j for i in range(m) for j in range(m)]

    def on_cols(s):
        return [i * m + s[j] for i in range(m) for j in range(m)]

    cyc = [(x + 1) % m for x in range(m)]
    swap = [1, 0] + list(range(2, m))
    flip = [j * m + i for i in range(m) for j in range(m)]
    return _group(n, [on_rows(cyc), on_rows(swap), on_cols(cyc), on_cols(swap), flip])


def on_pairs(m: int, gens) -> PermGroup:
    """Induced action of point permutations of {0..m-1} on colex-ranked 2-subsets."""
    pairs = all_ksubsets(m, 2)
    out = []
    for g in gens:
        out.append([subset_rank(sorted((g[a], g[b]))) for a, b in pairs])
    return _group(len(pairs), out)


def symmetric_on_pairs(m: int) -> PermGroup:
    return on_pairs(m, [[(x + 1) % m for x in range(m)], [1, 0] + list(range(2, m))])


def alternating_on_pairs(m: int) -> PermGroup:
    if m % 2:
        long = [(x + 1) % m for x in range(m)]
    else:
        long = [0] + [1 + (x % (m - 1)) for x in range(1, m)]
    return on_pairs(m, [long, [1, 2, 0] + list(range(3, m))])


def _pairs_of_projective_line(q: int, kind: str) -> PermGroup:
    """Action on the unordered pairs of projective points."""
    G = projective_line_group(q, kind)
    return on_pairs(q + 1, [g.images for g in G.generators])


def _sylow3_action_psl_2_8() -> PermGroup:
    """PSL(2,8) acting by conjugation on its 28 subgroups of order 3 (one per Sylow 3-subgroup)."""
    from .perm import elements
    G = projective_line_group(8, "psl")
    subgroups = {}
    for g in elements(G):
        if g.order() == 9:
            c = g.power(3)
            key = frozenset([c.images, c.inverse().images])
            subgroups.setdefault(key, None)
    keys = sorted(subgroups, key=lambda k: min(k))
    where = {k: i for i, k in enumerate(keys)}
    gens = []
    for h in G.generators:
        hi = h.inverse()
        img = []
        for k in keys:
            c = Permutation._trusted(min(k))
            d = hi * c * h
            img.append(where[frozenset([d.images, d.inverse().images])])
        gens.append(img)
    return _group(len(keys), gens)


# -- the group table ----------------------------------------------------------

@dataclass(frozen=True)
class CatalogGroup:
    name: str
    degree: int
    order: int
    label: str
    build: Callable[[], PermGroup]
    slow: bool = False


_GROUPS = [
    CatalogGroup("d10", 5, 10, "D10", lambda: dihedral(5)),
    CatalogGroup("agl_1_5", 5, 20, "AGL(1,5)", lambda: affine_line(5)),
    CatalogGroup("psl_2_5", 6, 60, "PSL(2,5)", lambda: projective_line_group(5, "psl")),
    CatalogGroup("pgl_2_5", 6, 120, "PGL(2,5)", lambda: projective_line_group(5, "pgl")),
    CatalogGroup("agl_1_7", 7, 42, "AGL(1,7)", lambda: affine_line(7)),
    CatalogGroup("psl_3_2", 7, 168, "PSL(3,2)", lambda: projective_space_group(2, 3)),
    CatalogGroup("agaml_1_8", 8, 168, "AGammaL(1,8)", lambda: affine_line(8, frobenius=True)),
    CatalogGroup("psl_2_7", 8, 168, "PSL(2,7)", lambda: projective_line_group(7, "psl")),
    CatalogGroup("pgl_2_7", 8, 336, "PGL(2,7)", lambda: projective_line_group(7, "pgl")),
    CatalogGroup("agl_3_2", 8, 1344, "AGL(3,2)", lambda: affine_group(2, 3)),
    CatalogGroup("s3wrs2", 9, 72, "S3 wr S2", lambda: grid_group(3)),
    CatalogGroup("agaml_1_9", 9, 144, "AGammaL(1,9)", lambda: affine_line(9, frobenius=True)),
    CatalogGroup("asl_2_3", 9, 216, "ASL(2,3)", lambda: affine_group(3, 2, special=True)),
    CatalogGroup("agl_2_3", 9, 432, "AGL(2,3)", lambda: affine_group(3, 2)),
    CatalogGroup("psl_2_8", 9, 504, "PSL(2,8)", lambda: projective_line_group(8, "psl")),
    CatalogGroup("pgaml_2_8", 9, 1512, "PGammaL(2,8)", lambda: projective_line_group(8, "pgammal")),
    CatalogGroup("a5_on_pairs", 10, 60, "A5 on pairs", lambda: alternating_on_pairs(5)),
    CatalogGroup("s5_on_pairs", 10, 120, "S5 on pairs", lambda: symmetric_on_pairs(5)),
    CatalogGroup("psl_2_9", 10, 360, "PSL(2,9)", lambda: projective_line_group(9, "psl")),
    CatalogGroup("psigmal_2_9", 10, 720, "PSigmaL(2,9)", lambda: projective_line_group(9, "psigmal")),
    CatalogGroup("pgl_2_9", 10, 720, "PGL(2,9)", lambda: projective_line_group(9, "pgl")),
    CatalogGroup("m10", 10, 720, "M10", m10),
    CatalogGroup("pgaml_2_9", 10, 1440, "PGammaL(2,9)", lambda: projective_line_group(9, "pgammal")),
    CatalogGroup("psl_2_11_on_11", 11, 660, "PSL(2,11)", psl_2_11_on_11),
    CatalogGroup("m11", 11, 7920, "M11", m11),
    CatalogGroup("psl_2_11", 12, 660, "PSL(2,11)", lambda: projective_line_group(11, "psl")),
    CatalogGroup("pgl_2_11", 12, 1320, "PGL(2,11)", lambda: projective_line_group(11, "pgl")),
    CatalogGroup("m11_on_12", 12, 7920, "M11", m11_on_12),
    CatalogGroup("m12", 12, 95040, "M12", m12),
    CatalogGroup("psl_3_3", 13, 5616, "PSL(3,3)", lambda: projective_space_group(3, 3)),
    CatalogGroup("psl_2_13", 14, 1092, "PSL(2,13)", lambda: projective_line_group(13, "psl")),
    CatalogGroup("pgl_2_13", 14, 2184, "PGL(2,13)", lambda: projective_line_group(13, "pgl")),
    CatalogGroup("psl_4_2", 15, 20160, "PSL(4,2)", lambda: projective_space_group(2, 4)),
    CatalogGroup("so4minus_16", 16, 1920, "2^4.SO4-(2)", so4minus_16),
    CatalogGroup("agaml_2_4", 16, 5760, "AGammaL(2,4)", lambda: affine_group(4, 2, frobenius=True)),
    CatalogGroup("affine_a6_16", 16, 5760, "2^4.A6", affine_a6_16),
    CatalogGroup("affine_sp4_2", 16, 11520, "2^4.S6 = 2^4.Sp(4,2)", affine_sp4_2),
    CatalogGroup("affine_a7_16", 16, 40320, "2^4.A7", affine_a7_16),
    CatalogGroup("agl_4_2", 16, 322560, "AGL(4,2)", lambda: affine_group(2, 4)),
    CatalogGroup("psl_2_16_2", 17, 8160, "PSL(2,16).2", psl_2_16_2),
    CatalogGroup("pgaml_2_16", 17, 16320, "PGammaL(2,16)", lambda: projective_line_group(16, "pgammal")),
    CatalogGroup("psl_2_17", 18, 2448, "PSL(2,17)", lambda: projective_line_group(17, "psl")),
    CatalogGroup("pgaml_3_4", 21, 120960, "PGammaL(3,4)", lambda: projective_space_group(4, 3, frobenius=True)),
    CatalogGroup("psigmal_2_25", 26, 15600, "PSigmaL(2,25)", lambda: projective_line_group(25, "psigmal")),
    CatalogGroup("pgl_2_7_on_pairs", 28, 336, "PGL(2,7) on pairs", lambda: _pairs_of_projective_line(7, "pgl"), slow=True),
    CatalogGroup("psl_2_8_on_28", 28, 504, "PSL(2,8) on Sylow 3-subgroups", _sylow3_action_psl_2_8, slow=True),
    CatalogGroup("agl_5_2", 32, 319979520, "AGL(5,2)", lambda: affine_group(2, 5)),
]

_BY_NAME = {g.name: g for g in _GROUPS}

# aliases for the degree-16 affine groups under their printed names
_BY_NAME["2^4.sp4_2"] = _BY_NAME["affine_sp4_2"]


def group_names() -> list[str]:
    return [g.name for g in _GROUPS]


def group_entry(name: str) -> CatalogGroup:
    try:
        return _BY_NAME[name]
    except KeyError:
        raise KeyError(f"unknown catalog group {name!r}") from None


@lru_cache(maxsize=None)
def catalog_group(name: str) -> PermGroup:
    e = group_entry(name)
    G = e.build()
    if G.order != e.order or G.degree != e.degree:
        raise AssertionError(f"{name}: built degree {G.degree}, order {G.order}")
    return G


def catalog_entries(max_degree: int | None = None, *, include_slow: bool = False) -> list[CatalogGroup]:
    out = [g for g in _GROUPS if include_slow or not g.slow]
    if max_degree is not None:
        out = [g for g in out if g.degree <= max_degree]
    return sorted(out, key=lambda g: (g.degree, g.order, g.name))


# -- the Seress list ----------------------------------------------------------

@dataclass(frozen=True)
class SeressEntry:
    degree: int
    gap_id: int
    name: str
    catalog: str | None


SERESS_LIST = (
    SeressEntry(5, 2, "D10", "d10"),
    SeressEntry(5, 3, "AGL(1,5)", "agl_1_5"),
    SeressEntry(6, 1, "PSL(2,5)", "psl_2_5"),
    SeressEntry(6, 2, "PGL(2,5)", "pgl_2_5"),
    SeressEntry(7, 4, "AGL(1,7)", "agl_1_7"),
    SeressEntry(7, 5, "PSL(3,2)", "psl_3_2"),
    SeressEntry(8, 2, "AGammaL(1,8)", "agaml_1_8"),
    SeressEntry(8, 4, "PSL(2,7)", "psl_2_7"),
    SeressEntry(8, 5, "PGL(2,7)", "pgl_2_7"),
    SeressEntry(8, 3, "AGL(3,2)", "agl_3_2"),
    SeressEntry(9, 2, "3^2.D8 = S3 wr S2", "s3wrs2"),
    SeressEntry(9, 5, "AGammaL(1,9)", "agaml_1_9"),
    SeressEntry(9, 6, "ASL(2,3)", "asl_2_3"),
    SeressEntry(9, 7, "AGL(2,3)", "agl_2_3"),
    SeressEntry(9, 8, "PSL(2,8)", "psl_2_8"),
    SeressEntry(9, 9, "PGammaL(2,8)", "pgaml_2_8"),
    SeressEntry(10, 2, "S5", "s5_on_pairs"),
    SeressEntry(10, 3, "PSL(2,9)", "psl_2_9"),
    SeressEntry(10, 5, "PSigmaL(2,9)", "psigmal_2_9"),
    SeressEntry(10, 4, "PGL(2,9)", "pgl_2_9"),
    SeressEntry(10, 6, "M10", "m10"),
    SeressEntry(10, 7, "PGammaL(2,9)", "pgaml_2_9"),
    SeressEntry(11, 1, "PSL(2,11)", "psl_2_11_on_11"),
    SeressEntry(11, 2, "M11", "m11"),
    SeressEntry(12, 4, "PGL(2,11)", "pgl_2_11"),
    SeressEntry(12, 1, "M11", "m11_on_12"),
    SeressEntry(12, 2, "M12", "m12"),
    SeressEntry(13, 7, "PSL(3,3)", "psl_3_3"),
    SeressEntry(14, 2, "PGL(2,13)", "pgl_2_13"),
    SeressEntry(15, 4, "PSL(4,2)", "psl_4_2"),
    SeressEntry(16, 12, "AGammaL(2,4)", "agaml_2_4"),
    SeressEntry(16, 17, "2^4.A6", "affine_a6_16"),
    SeressEntry(16, 16, "2^4.S6", "affine_sp4_2"),
    SeressEntry(16, 20, "2^4.A7", "affine_a7_16"),
    SeressEntry(16, 11, "AGL(4,2)", "agl_4_2"),
    SeressEntry(17, 7, "PSL(2,16).2", "psl_2_16_2"),
    SeressEntry(17, 8, "PGammaL(2,16)", "pgaml_2_16"),
    SeressEntry(21, 7, "PGammaL(3,4)", "pgaml_3_4"),
    SeressEntry(22, 1, "M22", None),
    SeressEntry(22, 2, "M22.2", None),
    SeressEntry(23, 5, "M23", None),
    SeressEntry(24, 1, "M24", None),
    SeressEntry(32, 3, "AGL(5,2)", "agl_5_2"),
)


# -- two-graphs -----------------------------------------------------------------

PALEY_Q = (5, 9, 13, 17, 25)


def paley_graph_with_infinity(q: int) -> Graph:
    F = field(q)
    if q % 4 != 1:
        raise ValueError("Paley construction needs q = 1 mod 4")
    rows = [0] * (q + 1)
    for x in range(q):
        for y in range(q):
            if x != y and F.sub(x, y) in F.squares:
                rows[x] |= 1 << y
    return Graph(q + 1, tuple(rows))


def paley_two_graph(q: int) -> TwoGraph:
    if q not in PALEY_Q:
        raise ValueError(f"Paley two-graph needs q in {PALEY_Q}")
    return two_graph_of(paley_graph_with_infinity(q))


def pentagon_two_graph() -> TwoGraph:
    return two_graph_of(Graph.from_edges(5, [(i, (i + 1) % 5) for i in range(5)]))


def symplectic_two_graph_16() -> TwoGraph:
    out = 0
    for x, y, z in combinations(range(16), 3):
        if not (symplectic_form(x, y) ^ symplectic_form(y, z) ^ symplectic_form(z, x)):
            out |= 1 << triple_rank(x, y, z)
    return TwoGraph(16, out)


def clebsch_graph() -> Graph:
    """Folded 5-cube on GF(2)^4: x ~ y iff x + y has weight 1 or 4."""
    diffs = {1, 2, 4, 8, 15}
    return Graph(16, tuple(sum(1 << y for y in range(16) if x ^ y in diffs) for x in range(16)))


def kneser_graph(m: int) -> Graph:
    pairs = all_ksubsets(m, 2)
    edges = [(i, j) for (i, p), (j, r) in combinations(enumerate(pairs), 2) if not set(p) & set(r)]
    return Graph.from_edges(len(pairs), edges)


def petersen_graph() -> Graph:
    return kneser_graph(5)


def triangular_graph(m: int) -> Graph:
    """Line graph of K_m: pairs meeting in one point."""
    pairs = all_ksubsets(m, 2)
    edges = [(i, j) for (i, p), (j, r) in combinations(enumerate(pairs), 2) if set(p) & set(r)]
    return Graph.from_edges(len(pairs), edges)


def rook_graph(m: int) -> Graph:
    edges = []
    for a, b in combinations(range(m * m), 2):
        if a // m == b // m or a % m == b % m:
            edges.append((a, b))
    return Graph.from_edges(m * m, edges)


def kneser_two_graph(m: int) -> TwoGraph:
    """The two-graph O1 u O2 u O4 over S_m on pairs.

    It is afforded by the line graph of K_m; the Kneser graph itself affords
    the complementary union O3 u O5.
    """
    if m < 5:
        raise ValueError("m must be at least 5")
    return two_graph_of(triangular_graph(m))


def grid_two_graph(m: int) -> TwoGraph:
    """The two-graph O1 u O2 over the m x m grid group, afforded by the rook's graph."""
    if m < 3:
        raise ValueError("m must be at least 3")
    return two_graph_of(rook_graph(m))


# orbit labels in the order used by the constructions above
PAIR_SHAPES = ("K1,3", "K3", "P4", "K2+P3", "3K2")
GRID_SHAPES = (3, 1, 2, 0)  # number of collinear pairs in the triple


def pair_triple_shape(pairs) -> str:
    """Isomorphism type of the 3-edge graph formed by three distinct pairs."""
    deg: dict[int, int] = {}
    for a, b in pairs:
        deg[a] = deg.get(a, 0) + 1
        deg[b] = deg.get(b, 0) + 1
    ds = sorted(deg.values(), reverse=True)
    if len(deg) == 3:
        return "K3"
    if ds[0] == 3:
        return "K1,3"
    if len(deg) == 6:
        return "3K2"
    if len(deg) == 5:
        return "K2+P3"
    return "P4"


def grid_triple_shape(m: int, pts) -> int:
    return sum(1 for a, b in combinations(pts, 2) if a // m == b // m or a % m == b % m)


def labelled_orbits(orbits, n: int, shape, labels) -> list[list[int]]:
    """Rearrange triple orbits by shape label; missing shapes give empty orbits."""
    table = all_triples(n)
    out = [[] for _ in labels]
    for orb in orbits:
        s = shape(table[orb[0]])
        out[labels.index(s)].extend(orb)
    return [sorted(o) for o in out]


def pair_orbits(m: int) -> list[list[int]]:
    """Triple orbits of S_m on pairs, as O1..O5 in PAIR_SHAPES order."""
    pairs = all_ksubsets(m, 2)
    G = symmetric_on_pairs(m)
    return labelled_orbits(orbits_on_triples(G), len(pairs),
                           lambda t: pair_triple_shape([pairs[i] for i in t]), PAIR_SHAPES)


def grid_orbits(m: int) -> list[list[int]]:
    """Triple orbits of the m x m grid group as O1..O4 in GRID_SHAPES order."""
    return labelled_orbits(orbits_on_triples(grid_group(m)), m * m,
                           lambda t: grid_triple_shape(m, t), GRID_SHAPES)


def a5_two_graphs() -> tuple[TwoGraph, TwoGraph]:
    """The two A5-invariant two-graphs built from one P4 orbit and the K1,3 orbit."""
    pairs = all_ksubsets(5, 2)
    orbits = orbits_on_triples(alternating_on_pairs(5))
    table = all_triples(10)
    shape = [pair_triple_shape([pairs[i] for i in table[o[0]]]) for o in orbits]
    star = shape.index("K1,3")
    p4 = [i for i, s in enumerate(shape) if s == "P4"]
    return tuple(TwoGraph(10, from_orbit_union(10, orbits, [star, i]).bits) for i in p4)


# colex pair rank -> point of the projective line over GF(9) (infinity = 9);
# maps the symmetric difference of the A5 pair onto paley_two_graph(9)
PAIRS_TO_PG1_9 = (0, 1, 3, 6, 2, 9, 7, 5, 8, 4)


def relabel(t: TripleSet, images) -> TripleSet:
    return t.permuted(images)


@dataclass(frozen=True)
class CatalogTwoGraph:
    name: str
    degree: int
    group: str | None
    build: Callable[[], TwoGraph]


TWO_GRAPHS = (
    CatalogTwoGraph("pentagon", 5, "d10", pentagon_two_graph),
    CatalogTwoGraph("paley_5", 6, "psl_2_5", lambda: paley_two_graph(5)),
    CatalogTwoGraph("grid_3", 9, "s3wrs2", lambda: grid_two_graph(3)),
    CatalogTwoGraph("paley_9", 10, "psigmal_2_9", lambda: paley_two_graph(9)),
    CatalogTwoGraph("a5_first", 10, "a5_on_pairs", lambda: a5_two_graphs()[0]),
    CatalogTwoGraph("a5_second", 10, "a5_on_pairs", lambda: a5_two_graphs()[1]),
    CatalogTwoGraph("paley_13", 14, "psl_2_13", lambda: paley_two_graph(13)),
    CatalogTwoGraph("symplectic_16", 16, "affine_sp4_2", symplectic_two_graph_16),
    CatalogTwoGraph("paley_17", 18, "psl_2_17", lambda: paley_two_graph(17)),
    CatalogTwoGraph("kneser_7", 21, None, lambda: kneser_two_graph(7)),
    CatalogTwoGraph("paley_25", 26, "psigmal_2_25", lambda: paley_two_graph(25)),
)

_TG_BY_NAME = {t.name: t for t in TWO_GRAPHS}


def catalog_two_graph(name: str) -> TwoGraph:
    try:
        return _TG_BY_NAME[name].build()
    except KeyError:
        raise KeyError(f"unknown catalog two-graph {name!r}") from None


def catalog_list() -> list[tuple[str, str, int, int | None]]:
    """(kind, name, degree, order) rows; two-graph orders are those of their named group."""
    rows = []
    for g in _GROUPS:
        rows.append(("group", g.name, g.degree, g.order))
    for t in TWO_GRAPHS:
        rows.append(("two-graph", t.name, t.degree, _BY_NAME[t.group].order if t.group else None))
    return rows
