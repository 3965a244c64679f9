"""Two-graphs and raw 3-uniform hypergraphs as bitsets over colex triple ranks."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from pathlib import Path
from typing import Iterable, Sequence

from .graphs import Graph
from .subsets import MAX_DEGREE, all_triples, bits, triple_rank


@dataclass(frozen=True)
class TripleSet:
    """A set of 3-subsets of range(n); bit r of ``bits`` is the triple of colex rank r."""

    n: int
    bits: int

    def __post_init__(self):
        if not 1 <= self.n <= MAX_DEGREE:
            raise ValueError(f"point count must be in 1..{MAX_DEGREE}")
        if self.bits < 0 or self.bits >> comb(self.n, 3):
            raise ValueError("triple bits exceed C(n,3)")

    @classmethod
    def from_triples(cls, n: int, triples: Iterable[Sequence[int]]):
        b = 0
        for t in triples:
            a, bb, c = t
            if len({a, bb, c}) != 3 or not all(0 <= p < n for p in t):
                raise ValueError(f"bad triple {t!r}")
            b |= 1 << triple_rank(a, bb, c)
        return cls(n, b)

    @classmethod
    def complete(cls, n: int):
        return cls(n, (1 << comb(n, 3)) - 1)

    @classmethod
    def empty(cls, n: int):
        return cls(n, 0)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def has_triple(self, a: int, b: int, c: int) -> bool:
        return bool((self.bits >> triple_rank(a, b, c)) & 1)

    def ranks(self) -> list[int]:
        return list(bits(self.bits))

    def triples(self) -> list[tuple[int, int, int]]:
        table = all_triples(self.n)
        return [table[r] for r in bits(self.bits)]

    def permuted(self, perm) -> "TripleSet":
        img = perm.images if hasattr(perm, "images") else perm
        out = 0
        for a, b, c in self.triples():
            out |= 1 << triple_rank(img[a], img[b], img[c])
        return type(self)._trusted(self.n, out)

    @classmethod
    def _trusted(cls, n: int, b: int):
        t = object.__new__(cls)
        object.__setattr__(t, "n", n)
        object.__setattr__(t, "bits", b)
        return t

    def raw(self) -> "TripleSet":
        return TripleSet._trusted(self.n, self.bits)


class TwoGraph(TripleSet):
    """A triple set in which every 4-subset holds an even number of triples."""

    def __post_init__(self):
        super().__post_init__()
        if not is_two_graph(self):
            raise ValueError("triple set violates the two-graph axiom")


def _pair_links(t: TripleSet) -> list[list[int]]:
    """links[a][b] = bitmask of c with {a,b,c} in t."""
    n = t.n
    links = [[0] * n for _ in range(n)]
    table = all_triples(n)
    for r in bits(t.bits):
        a, b, c = table[r]
        links[a][b] |= 1 << c
        links[b][a] |= 1 << c
        links[a][c] |= 1 << b
        links[c][a] |= 1 << b
        links[b][c] |= 1 << a
        links[c][b] |= 1 << a
    return links


def is_two_graph(t: TripleSet, *, transitive: bool = False) -> bool:
    """Check the even-intersection axiom on 4-subsets.

    With ``transitive=True`` only the 4-subsets through the last point are
    checked.  That is valid only when the caller knows the triple set is
    invariant under a transitive group.
    """
    n = t.n
    if n < 4:
        return True
    links = _pair_links(t)
    full = (1 << n) - 1
    if transitive:
        d = n - 1
        ld = links[d]
        for a in range(d):
            for b in range(a + 1, d):
                # {a,b,c,d}: [abc] + [abd] + [acd] + [bcd]
                above = full ^ ((1 << (b + 1)) - 1) ^ (1 << d)
                par = (links[a][b] ^ ld[a] ^ ld[b]) & above
                if (ld[a] >> b) & 1:
                    par ^= above
                if par:
                    return False
        return True
    for a in range(n):
        la = links[a]
        for b in range(a + 1, n):
            lab = la[b]
            lb = links[b]
            for c in range(b + 1, n):
                above = full ^ ((1 << (c + 1)) - 1)
                if not above:
                    break
                par = (lab ^ la[c] ^ lb[c]) & above
                if (lab >> c) & 1:
                    par ^= above
                if par:
                    return False
    return True


def two_graph_of(g: Graph) -> TwoGraph:
    """Triples carrying an odd number of edges of g."""
    n = g.n
    rows = g.rows
    out = 0
    r = 0
    for c in range(2, n):
        rc = rows[c]
        for b in range(1, c):
            e_bc = (rc >> b) & 1
            rb = rows[b]
            for a in range(b):
                if (((rb >> a) ^ (rc >> a)) & 1) ^ e_bc:
                    out |= 1 << r
                r += 1
    return TwoGraph._trusted(n, out)


def as_two_graph(t: TripleSet) -> TwoGraph:
    return t if isinstance(t, TwoGraph) else TwoGraph(t.n, t.bits)


def tg_complement(t: TripleSet) -> TwoGraph:
    out = TwoGraph._trusted(t.n, ((1 << comb(t.n, 3)) - 1) ^ t.bits)
    assert is_two_graph(out), "complement of a two-graph must be a two-graph"
    return out


def symmetric_difference(a: TripleSet, b: TripleSet) -> TripleSet:
    if a.n != b.n:
        raise ValueError("point counts differ")
    return TripleSet._trusted(a.n, a.bits ^ b.bits)


def orbit_masks(orbits: Sequence[Sequence[int]]) -> list[int]:
    out = []
    for orb in orbits:
        m = 0
        for r in orb:
            m |= 1 << r
        out.append(m)
    return out


def from_orbit_union(n: int, orbits: Sequence[Sequence[int]], selector: Iterable[int]) -> TripleSet:
    """Union of the selected orbits (by index) as a raw triple set."""
    masks = orbit_masks(orbits)
    out = 0
    for i in selector:
        out |= masks[i]
    return TripleSet._trusted(n, out)


def triple_orbit_profile(x: Sequence[int], orbits: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """How many of the four 3-subsets of the 4-set x fall in each orbit."""
    if len(set(x)) != 4:
        raise ValueError("profile needs a 4-subset")
    where = {}
    for i, orb in enumerate(orbits):
        for r in orb:
            where[r] = i
    counts = [0] * len(orbits)
    for tri in combinations(sorted(x), 3):
        counts[where[triple_rank(*tri)]] += 1
    return tuple(counts)


def parity_constraints(n: int, orbits: Sequence[Sequence[int]], *, transitive: bool = False) -> set[int]:
    """Distinct odd-parity profiles of 4-subsets, as bitmasks over orbit indices.

    A union of orbits is a two-graph iff its selector mask has even overlap
    with every returned mask.
    """
    where = [0] * comb(n, 3)
    for i, orb in enumerate(orbits):
        for r in orb:
            where[r] = i
    out = set()
    if transitive:
        quads = ((a, b, c, n - 1) for a, b, c in combinations(range(n - 1), 3))
    else:
        quads = combinations(range(n), 4)
    for a, b, c, d in quads:
        m = ((1 << where[triple_rank(a, b, c)]) ^ (1 << where[triple_rank(a, b, d)])
             ^ (1 << where[triple_rank(a, c, d)]) ^ (1 << where[triple_rank(b, c, d)]))
        if m:
            out.add(m)
    return out


# -- two-graph text format --------------------------------------------------

def format_two_graph(t: TripleSet) -> str:
    lines = [str(t.n)] + [f"{a + 1} {b + 1} {c + 1}" for a, b, c in sorted(t.triples())]
    return "\n".join(lines) + "\n"


def parse_triple_set(text: str) -> TripleSet:
    rows = [ln.strip() for ln in text.splitlines()]
    rows = [ln for ln in rows if ln and not ln.startswith("#")]
    if not rows:
        raise ValueError("empty two-graph file")
    n = int(rows[0])
    triples = []
    for ln in rows[1:]:
        parts = [int(p) - 1 for p in ln.split()]
        if len(parts) != 3:
            raise ValueError(f"bad triple line {ln!r}")
        triples.append(parts)
    return TripleSet.from_triples(n, triples)


def parse_two_graph(text: str) -> TwoGraph:
    return as_two_graph(parse_triple_set(text))


def read_two_graph_file(path) -> TwoGraph:
    return parse_two_graph(Path(path).read_text())


def read_triple_file(path) -> TripleSet:
    return parse_triple_set(Path(path).read_text())


def write_two_graph_file(t: TripleSet, path) -> None:
    Path(path).write_text(format_two_graph(t))
