"""Simple graphs as bitset rows, Seidel switching and switching classes."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Iterator

from .subsets import MAX_DEGREE, bits, mask_of


@dataclass(frozen=True)
class VertexSet:
    n: int
    mask: int

    def __post_init__(self):
        if self.mask >> self.n:
            raise ValueError("vertex set exceeds n")

    @classmethod
    def of(cls, n: int, points: Iterable[int]) -> "VertexSet":
        return cls(n, mask_of(points))

    def __iter__(self):
        return bits(self.mask)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __contains__(self, v: int) -> bool:
        return bool((self.mask >> v) & 1)

    def complement(self) -> "VertexSet":
        return VertexSet(self.n, ((1 << self.n) - 1) ^ self.mask)

    def symmetric_difference(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.n, self.mask ^ other.mask)

    def points(self) -> list[int]:
        return list(bits(self.mask))


def _as_mask(x) -> int:
    if isinstance(x, VertexSet):
        return x.mask
    if isinstance(x, int):
        return x
    return mask_of(x)


@dataclass(frozen=True)
class Graph:
    """Graph on vertices 0..n-1; ``rows[v]`` is the neighbour bitmask of v.

    Equality is equality of labelled graphs, not isomorphism.
    """

    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if not 1 <= self.n <= MAX_DEGREE:
            raise ValueError(f"graph size must be in 1..{MAX_DEGREE}")
        if len(self.rows) != self.n:
            raise ValueError("row count does not match n")
        for v, r in enumerate(self.rows):
            if (r >> v) & 1 or r >> self.n:
                raise ValueError(f"bad row for vertex {v}")
            for u in bits(r):
                if not (self.rows[u] >> v) & 1:
                    raise ValueError("adjacency not symmetric")

    @classmethod
    def _trusted(cls, n: int, rows) -> "Graph":
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "rows", tuple(rows))
        return g

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError("loops are not allowed")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def null(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    @classmethod
    def complete(cls, n: int) -> "Graph":
        full = (1 << n) - 1
        return cls(n, tuple(full ^ (1 << v) for v in range(n)))

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.rows[u] >> v) & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.rows[u]) if u < v]

    def num_edges(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    def permuted(self, perm) -> "Graph":
        """The image graph: edge {u,v} becomes {perm(u), perm(v)}."""
        img = perm.images if hasattr(perm, "images") else perm
        rows = [0] * self.n
        for u in range(self.n):
            m = 0
            for v in bits(self.rows[u]):
                m |= 1 << img[v]
            rows[img[u]] = m
        return Graph._trusted(self.n, rows)

    def induced_edge_count(self, vertices: Iterable[int]) -> int:
        vs = list(vertices)
        m = mask_of(vs)
        return sum((self.rows[v] & m).bit_count() for v in vs) // 2


def switch(g: Graph, x) -> Graph:
    """Seidel switching: toggle every pair with exactly one end in x."""
    xm = _as_mask(x)
    if xm >> g.n:
        raise ValueError("switching set exceeds n")
    full = (1 << g.n) - 1
    out = full ^ xm
    rows = [r ^ out if (xm >> v) & 1 else r ^ xm for v, r in enumerate(g.rows)]
    return Graph._trusted(g.n, rows)


def switch_compose_law_check(g: Graph, x, y) -> bool:
    xm, ym = _as_mask(x), _as_mask(y)
    return switch(switch(g, xm), ym) == switch(g, xm ^ ym)


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph._trusted(g.n, [full ^ r ^ (1 << v) for v, r in enumerate(g.rows)])


def gray_subset(i: int) -> int:
    return i ^ (i >> 1)


def gray_index(mask: int) -> int:
    """Inverse of :func:`gray_subset`."""
    i = 0
    while mask:
        i ^= mask
        mask >>= 1
    return i


def class_size(n: int) -> int:
    return 1 << (n - 1)


def switching_class(g: Graph, start: int = 0, stop: int | None = None) -> Iterator[Graph]:
    """Members of the switching class in Gray-code order of the switching set.

    Switching sets range over subsets of {0..n-2}.  ``start``/``stop`` select a
    contiguous shard of Gray indices; the first graph of a shard is built with
    one full switch, the rest by single-vertex updates.
    """
    n = g.n
    if stop is None:
        stop = class_size(n)
    if not 0 <= start <= stop <= class_size(n):
        raise ValueError("shard outside the class")
    if start == stop:
        return
    full = (1 << n) - 1
    rows = list(switch(g, gray_subset(start)).rows)
    yield Graph._trusted(n, rows)
    for i in range(start + 1, stop):
        v = (i & -i).bit_length() - 1
        bit = 1 << v
        for u in range(n):
            rows[u] ^= bit
        rows[v] ^= full  # undoes its own bit and flips the whole row
        yield Graph._trusted(n, rows)


def even_valency_representative(g: Graph) -> Graph:
    if g.n % 2 == 0:
        raise ValueError("even-valency member is unique only for odd n")
    odd = mask_of(v for v, d in enumerate(g.degrees()) if d % 2)
    return switch(g, odd)


def isolated_vertex_representative(t) -> Graph:
    """Class member of a two-graph with the last vertex isolated.

    x ~ y iff {x, y, n-1} is a triple of ``t``.
    """
    n = t.n
    last = n - 1
    rows = [0] * n
    for x in range(last):
        for y in range(x + 1, last):
            if t.has_triple(x, y, last):
                rows[x] |= 1 << y
                rows[y] |= 1 << x
    return Graph._trusted(n, rows)


def isolate_vertex(g: Graph, v: int) -> Graph:
    """The class member in which vertex v is isolated."""
    return switch(g, g.rows[v])


# -- graph text format ------------------------------------------------------

def format_graph(g: Graph) -> str:
    lines = [str(g.n)] + [f"{u + 1} {v + 1}" for u, v in sorted(g.edges())]
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> Graph:
    rows = [ln.strip() for ln in text.splitlines()]
    rows = [ln for ln in rows if ln and not ln.startswith("#")]
    if not rows:
        raise ValueError("empty graph file")
    n = int(rows[0])
    edges = []
    for ln in rows[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ValueError(f"bad edge line {ln!r}")
        u, v = int(parts[0]) - 1, int(parts[1]) - 1
        if not (0 <= u < n and 0 <= v < n) or u == v:
            raise ValueError(f"bad edge {ln!r}")
        edges.append((u, v))
    return Graph.from_edges(n, edges)


def read_graph_file(path) -> Graph:
    return parse_graph(Path(path).read_text())


def write_graph_file(g: Graph, path) -> None:
    Path(path).write_text(format_graph(g))
