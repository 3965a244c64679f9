"""Permutations and permutation groups.

Points are 0-based in memory.  The text format for groups is 1-based.
Composition is left-to-right: ``compose(p, q)`` applies ``p`` first, so
``compose(p, q)(i) == q(p(i))``.  This matches exponent notation ``x^(pq)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm, prod
from pathlib import Path
from typing import Iterable, Iterator, Sequence

from .budget import BudgetExceeded, element_budget
from .subsets import MAX_DEGREE, all_triples, triple_rank


def _mul(p: tuple, q: tuple) -> tuple:
    return tuple([q[i] for i in p])


def _inv(p: tuple) -> tuple:
    r = [0] * len(p)
    for i, x in enumerate(p):
        r[x] = i
    return tuple(r)


def _cycles(p: Sequence[int]) -> list[tuple[int, ...]]:
    seen = [False] * len(p)
    out = []
    for i in range(len(p)):
        if seen[i]:
            continue
        cyc = [i]
        seen[i] = True
        j = p[i]
        while j != i:
            seen[j] = True
            cyc.append(j)
            j = p[j]
        out.append(tuple(cyc))
    return out


@dataclass(frozen=True)
class CycleStats:
    orb: int
    fix: int
    cycle_lengths: tuple[int, ...]


class Permutation:
    """An immutable bijection of ``range(degree)``."""

    __slots__ = ("images", "_hash")

    def __init__(self, images: Iterable[int]):
        images = tuple(images)
        n = len(images)
        if n == 0:
            raise ValueError("permutation of degree 0")
        if sorted(images) != list(range(n)):
            raise ValueError(f"not a permutation: {images!r}")
        object.__setattr__(self, "images", images)
        object.__setattr__(self, "_hash", hash(images))

    def __setattr__(self, name, value):
        raise AttributeError("Permutation is immutable")

    @classmethod
    def _trusted(cls, images: tuple) -> "Permutation":
        p = object.__new__(cls)
        object.__setattr__(p, "images", images)
        object.__setattr__(p, "_hash", hash(images))
        return p

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Sequence[int]]) -> "Permutation":
        img = list(range(n))
        for cyc in cycles:
            for a, b in zip(cyc, tuple(cyc[1:]) + (cyc[0],)):
                img[a] = b
        return cls(img)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self) -> int:
        return self._hash

    def __len__(self) -> int:
        return len(self.images)

    def __repr__(self) -> str:
        cyc = [c for c in _cycles(self.images) if len(c) > 1]
        if not cyc:
            return f"Permutation(id, n={self.degree})"
        body = "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)
        return f"Permutation({body}, n={self.degree})"

    def inverse(self) -> "Permutation":
        return Permutation._trusted(_inv(self.images))

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        return _cycles(self.images)

    def order(self) -> int:
        return lcm(*(len(c) for c in _cycles(self.images)))

    def moved_points(self) -> list[int]:
        return [i for i, x in enumerate(self.images) if i != x]

    def power(self, k: int) -> "Permutation":
        result = tuple(range(self.degree))
        base = self.images if k >= 0 else _inv(self.images)
        k = abs(k)
        while k:
            if k & 1:
                result = _mul(result, base)
            base = _mul(base, base)
            k >>= 1
        return Permutation._trusted(result)

    def image_of_set(self, s: Iterable[int]) -> frozenset[int]:
        return frozenset(self.images[i] for i in s)


def identity(n: int) -> Permutation:
    if n < 1:
        raise ValueError("identity needs n >= 1")
    return Permutation._trusted(tuple(range(n)))


def compose(p: Permutation, q: Permutation) -> Permutation:
    """The permutation ``i -> q(p(i))``."""
    if p.degree != q.degree:
        raise ValueError(f"degree mismatch: {p.degree} vs {q.degree}")
    return Permutation._trusted(_mul(p.images, q.images))


def cycle_stats(p: Permutation | Sequence[int]) -> CycleStats:
    images = p.images if isinstance(p, Permutation) else p
    lengths = sorted((len(c) for c in _cycles(images)), reverse=True)
    return CycleStats(orb=len(lengths), fix=lengths.count(1), cycle_lengths=tuple(lengths))


class PermGroup:
    """A permutation group with a stabilizer chain.

    The chain is built at construction with deterministic Schreier-Sims.  Each
    new base point is the smallest point moved by the generator that forced it.
    """

    def __init__(self, degree: int, generators: Sequence[Permutation], *,
                 _base=None, _strong=None):
        if degree < 1 or degree > MAX_DEGREE:
            raise ValueError(f"degree must be in 1..{MAX_DEGREE}, got {degree}")
        for g in generators:
            if g.degree != degree:
                raise ValueError(f"generator of degree {g.degree} in a group of degree {degree}")
        self.degree = degree
        self.generators = tuple(generators)
        if _base is None:
            base, strong = _schreier_sims(degree, [g.images for g in self.generators])
        else:
            base, strong = list(_base), [tuple(s) for s in _strong]
        self.base = tuple(base)
        self._strong = strong
        self._levels = []
        for i, b in enumerate(self.base):
            gens = [s for s in strong if all(s[x] == x for x in self.base[:i])]
            self._levels.append(_transversal(degree, b, gens))
        self.order = prod(len(t) for t in self._levels)

    @classmethod
    def from_strong_generators(cls, degree: int, base: Sequence[int],
                               strong: Sequence[Permutation]) -> "PermGroup":
        """Build from a base and a strong generating set known to be valid."""
        strong = [s for s in strong if not s.is_identity()]
        return cls(degree, strong, _base=base, _strong=[s.images for s in strong])

    def __repr__(self) -> str:
        return f"PermGroup(degree={self.degree}, order={self.order})"

    def __len__(self) -> int:
        return self.order

    def transversal_sizes(self) -> list[int]:
        return [len(t) for t in self._levels]

    def contains(self, p: Permutation) -> bool:
        if p.degree != self.degree:
            return False
        h = p.images
        for b, t in zip(self.base, self._levels):
            x = h[b]
            if x not in t:
                return False
            h = _mul(h, t[x][1])
        return all(i == x for i, x in enumerate(h))

    __contains__ = contains

    def _element_tuples(self) -> Iterator[tuple]:
        levels = [[u for u, _ in t.values()] for t in self._levels]
        n = self.degree

        def rec(i, prefix):
            if i < 0:
                yield prefix
                return
            for u in levels[i]:
                yield from rec(i - 1, _mul(prefix, u))

        yield from rec(len(levels) - 1, tuple(range(n)))

    def elements(self, budget: int | None = None) -> Iterator[Permutation]:
        """Every element once, identity first.  Refuses past the budget."""
        limit = element_budget() if budget is None else budget
        if self.order > limit:
            raise BudgetExceeded(f"group of order {self.order} exceeds element budget {limit}")
        for t in self._element_tuples():
            yield Permutation._trusted(t)

    def is_trivial(self) -> bool:
        return self.order == 1


def _transversal(n: int, b: int, gens: list[tuple]) -> dict[int, tuple[tuple, tuple]]:
    ident = tuple(range(n))
    t = {b: (ident, ident)}
    queue = [b]
    for p in queue:
        u = t[p][0]
        for s in gens:
            q = s[p]
            if q not in t:
                v = _mul(u, s)
                t[q] = (v, _inv(v))
                queue.append(q)
    return t


def _schreier_sims(n: int, gens: list[tuple]) -> tuple[list[int], list[tuple]]:
    ident = tuple(range(n))
    strong: list[tuple] = []
    for g in gens:
        if g != ident and g not in strong:
            strong.append(g)
    base: list[int] = []
    for g in strong:
        if all(g[b] == b for b in base):
            base.append(next(i for i in range(n) if g[i] != i))

    trans: list[dict | None] = [None] * len(base)

    def level_gens(i):
        return [s for s in strong if all(s[x] == x for x in base[:i])]

    def strip(h, start):
        for lvl in range(start, len(base)):
            x = h[base[lvl]]
            t = trans[lvl]
            if x not in t:
                return h, lvl
            h = _mul(h, t[x][1])
        return h, len(base)

    i = len(base) - 1
    while i >= 0:
        gi = level_gens(i)
        t = _transversal(n, base[i], gi)
        trans[i] = t
        jumped = False
        for p, (u, _) in list(t.items()):
            for s in gi:
                h = _mul(_mul(u, s), t[s[p]][1])
                if h == ident:
                    continue
                h, j = strip(h, i + 1)
                if j < len(base) or h != ident:
                    if j == len(base):
                        base.append(next(k for k in range(n) if h[k] != k))
                        trans.append(None)
                    strong.append(h)
                    # levels i+1..j gained a generator; rebuild them bottom-up
                    for lvl in range(i + 1, j + 1):
                        trans[lvl] = _transversal(n, base[lvl], level_gens(lvl))
                    i = j
                    jumped = True
                    break
            if jumped:
                break
        if not jumped:
            i -= 1
    return base, strong


def group_from_generators(gens: Sequence[Permutation]) -> PermGroup:
    if not gens:
        raise ValueError("need at least one generator")
    n = gens[0].degree
    return PermGroup(n, gens)


def symmetric_group(n: int) -> PermGroup:
    if n == 1:
        return PermGroup(1, [identity(1)])
    gens = [Permutation.from_cycles(n, [tuple(range(n))]), Permutation.from_cycles(n, [(0, 1)])]
    return PermGroup(n, gens)


def elements(G: PermGroup, budget: int | None = None) -> Iterator[Permutation]:
    return G.elements(budget)


def orbit(G: PermGroup, seed) -> set:
    """The orbit of a point or of a subset (any iterable of points)."""
    gens = [g.images for g in G.generators]
    if isinstance(seed, int):
        if not 0 <= seed < G.degree:
            raise ValueError(f"point {seed} outside degree {G.degree}")
        seen = {seed}
        queue = [seed]
        for p in queue:
            for g in gens:
                q = g[p]
                if q not in seen:
                    seen.add(q)
                    queue.append(q)
        return seen
    start = frozenset(seed)
    if any(not 0 <= p < G.degree for p in start):
        raise ValueError("subset point outside degree")
    seen = {start}
    queue = [start]
    for s in queue:
        for g in gens:
            t = frozenset(g[p] for p in s)
            if t not in seen:
                seen.add(t)
                queue.append(t)
    return seen


def point_orbits(G: PermGroup) -> list[list[int]]:
    seen = set()
    out = []
    for p in range(G.degree):
        if p not in seen:
            o = sorted(orbit(G, p))
            seen.update(o)
            out.append(o)
    return out


def orbits_on_triples(G: PermGroup) -> list[list[int]]:
    """Orbits on 3-subsets as sorted lists of colex ranks, ordered by least member."""
    n = G.degree
    triples = all_triples(n)
    parent = list(range(len(triples)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in G.generators:
        im = g.images
        for r, (a, b, c) in enumerate(triples):
            s = triple_rank(im[a], im[b], im[c])
            x, y = find(r), find(s)
            if x != y:
                if x < y:
                    parent[y] = x
                else:
                    parent[x] = y
    groups: dict[int, list[int]] = {}
    for r in range(len(triples)):
        groups.setdefault(find(r), []).append(r)
    return [groups[k] for k in sorted(groups, key=lambda k: groups[k][0])]


def is_transitive(G: PermGroup) -> bool:
    return len(orbit(G, 0)) == G.degree


def minimal_block(G: PermGroup, a: int, b: int) -> frozenset[int]:
    """Smallest block of imprimitivity containing points a and b."""
    n = G.degree
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    gens = [g.images for g in G.generators]
    parent[find(b)] = find(a)
    queue = [(a, b)]
    while queue:
        x, y = queue.pop()
        for g in gens:
            u, v = find(g[x]), find(g[y])
            if u != v:
                parent[max(u, v)] = min(u, v)
                queue.append((g[x], g[y]))
    root = find(a)
    return frozenset(p for p in range(n) if find(p) == root)


def block_system(G: PermGroup) -> list[frozenset[int]] | None:
    """A nontrivial block system, or None when G is primitive or intransitive."""
    if not is_transitive(G):
        return None
    n = G.degree
    for b in range(1, n):
        block = minimal_block(G, 0, b)
        if len(block) < n:
            blocks = {frozenset(block)}
            queue = [frozenset(block)]
            for blk in queue:
                for g in G.generators:
                    img = g.image_of_set(blk)
                    if img not in blocks:
                        blocks.add(img)
                        queue.append(img)
            return sorted(blocks, key=min)
    return None


def is_primitive(G: PermGroup) -> bool:
    if G.degree == 1:
        return True
    if not is_transitive(G):
        return False
    return block_system(G) is None


def stabilizer_order(G: PermGroup, predicate) -> int:
    """Count elements satisfying ``predicate`` by enumeration (small groups)."""
    return sum(1 for g in G.elements() if predicate(g))


# -- group text format ------------------------------------------------------

def format_group(G: PermGroup) -> str:
    lines = [str(G.degree)]
    for g in G.generators:
        lines.append(" ".join(str(x + 1) for x in g.images))
    return "\n".join(lines) + "\n"


def parse_group(text: str) -> PermGroup:
    rows = [ln.strip() for ln in text.splitlines()]
    rows = [ln for ln in rows if ln and not ln.startswith("#")]
    if not rows:
        raise ValueError("empty group file")
    n = int(rows[0])
    gens = []
    for ln in rows[1:]:
        imgs = [int(x) - 1 for x in ln.split()]
        if len(imgs) != n:
            raise ValueError(f"generator has {len(imgs)} images, expected {n}")
        gens.append(Permutation(imgs))
    if not gens:
        gens = [identity(n)]
    return PermGroup(n, gens)


def read_group_file(path) -> PermGroup:
    return parse_group(Path(path).read_text())


def write_group_file(G: PermGroup, path) -> None:
    Path(path).write_text(format_group(G))
