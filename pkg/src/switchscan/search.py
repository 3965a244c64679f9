"""From a primitive group to its two-graphs and the class scan for a rigid member.

For each nonempty union of triple orbits (omitting the last orbit, so only
one of each complementary pair is seen) the pipeline keeps the unions that
are two-graphs with full automorphism group G, then scans the switching class
of each survivor for a graph with trivial automorphism group.

Scans may be sharded over an executor supplied by the caller.  Shards are
contiguous ranges of Gray-code indices over subsets of {0..n-2}.
"""

from __future__ import annotations

import concurrent.futures as cf
from dataclasses import dataclass, field
from typing import Sequence

from . import _kernels
from .autom import graph_aut, hypergraph_aut
from .budget import BudgetExceeded
from .graphs import (Graph, VertexSet, class_size, even_valency_representative, gray_subset,
                     isolated_vertex_representative, switch, switching_class)
from .perm import PermGroup, is_primitive, is_transitive, orbits_on_triples
from .twograph import TripleSet, is_two_graph, orbit_masks, parity_constraints

MAX_TRIPLE_ORBITS = 20
MIN_SHARD = 1024

WITNESS = "witness_found"
EXCEPTION = "exception"
NOT_FULL = "discarded_not_full_group"
NOT_TWO_GRAPH = "discarded_not_two_graph"
STATUSES = (WITNESS, EXCEPTION, NOT_FULL, NOT_TWO_GRAPH)
PENDING = "pending_scan"  # survived step (b), class not scanned yet


# -- class scan -----------------------------------------------------------------

@dataclass(frozen=True)
class ScanResult:
    """Outcome of a switching-class scan; ``index`` is the Gray index of the witness."""

    witness: VertexSet | None
    index: int | None
    scanned: int
    complete: bool

    @property
    def exception(self) -> bool:
        return self.witness is None and self.complete


def _scan_shard(rows, n, start, stop):
    return _kernels.scan_range(list(rows), n, start, stop)


def shard_ranges(total: int, shards: int) -> list[tuple[int, int]]:
    shards = max(1, min(shards, max(1, total // MIN_SHARD)))
    step = -(-total // shards)
    return [(a, min(a + step, total)) for a in range(0, total, step)]


def find_trivial_graph(t: TripleSet, mode: str = "exhaustive", *, executor: cf.Executor | None = None,
                       shards: int | None = None) -> ScanResult:
    """Search the switching class of t for a graph with trivial automorphism group.

    Members are sigma_X(rep) with rep the isolated-vertex representative and X
    running over subsets of {0..n-2} in Gray-code order.  ``exhaustive``
    returns the earliest witness; ``fast`` returns whichever shard reports
    first.  A scan that finishes every shard without a witness is complete and
    certifies that no member is rigid.
    """
    if mode not in ("exhaustive", "fast"):
        raise ValueError(f"unknown scan mode {mode!r}")
    rep = isolated_vertex_representative(t)
    n = t.n
    total = class_size(n)
    rows = tuple(rep.rows)
    if executor is None:
        idx, scanned = _kernels.scan_range(list(rows), n, 0, total)
        return _result(n, idx, scanned if idx < 0 else idx + 1, total)
    ranges = shard_ranges(total, shards or 8)
    if mode == "exhaustive":
        futures = [executor.submit(_scan_shard, rows, n, a, b) for a, b in ranges]
        try:
            for fut in futures:
                idx, _ = fut.result()
                if idx >= 0:
                    return _result(n, idx, idx + 1, total)
        finally:
            for fut in futures:
                fut.cancel()
        return _result(n, -1, total, total)
    futures = {executor.submit(_scan_shard, rows, n, a, b): (a, b) for a, b in ranges}
    scanned = 0
    try:
        for fut in cf.as_completed(futures):
            idx, cnt = fut.result()
            scanned += cnt
            if idx >= 0:
                return _result(n, idx, scanned, total, complete=False)
    finally:
        for fut in futures:
            fut.cancel()
    return _result(n, -1, scanned, total)


def _result(n, idx, scanned, total, complete=True) -> ScanResult:
    if idx < 0:
        return ScanResult(None, None, scanned, scanned == total)
    return ScanResult(VertexSet(n, gray_subset(idx)), idx, scanned, complete)


def witness_graph(t: TripleSet, x: VertexSet) -> Graph:
    return switch(isolated_vertex_representative(t), x)


def validate_witness(t: TripleSet, x: VertexSet) -> bool:
    """Recompute |Aut| of the witness graph with the full group machinery."""
    if (x.mask >> (t.n - 1)) & 1:
        return False
    return graph_aut(witness_graph(t, x)).order == 1


# -- the pipeline ---------------------------------------------------------------

@dataclass
class Candidate:
    """One union of triple orbits; the triple set is kept only when it is a two-graph."""

    selector: tuple[int, ...]
    triples: int
    status: str
    two_graph: TripleSet | None = None
    aut_order: int | None = None
    witness: VertexSet | None = None
    scanned: int = 0

    def as_dict(self) -> dict:
        return {
            "orbits": [i + 1 for i in self.selector],
            "triples": self.triples,
            "aut_order": None if self.aut_order is None else str(self.aut_order),
            "status": self.status,
            "witness": None if self.witness is None else [v + 1 for v in self.witness],
            "scanned": self.scanned,
        }


@dataclass
class ClassificationReport:
    group_name: str
    degree: int
    group_order: int
    primitive: bool
    candidates: list[Candidate] = field(default_factory=list)
    error: str | None = None

    def survivors(self) -> list[Candidate]:
        return [c for c in self.candidates if c.status in (WITNESS, EXCEPTION, PENDING)]

    def exceptions(self) -> list[Candidate]:
        return [c for c in self.candidates if c.status == EXCEPTION]

    def as_dict(self) -> dict:
        out = {
            "group": {"name": self.group_name, "degree": self.degree,
                      "order": str(self.group_order), "primitive": self.primitive},
            "candidates": [c.as_dict() for c in self.candidates],
        }
        if self.error is not None:
            out["error"] = self.error
        return out


def two_graph_selectors(n: int, orbits: Sequence[Sequence[int]], *, transitive: bool) -> list[tuple[tuple[int, ...], bool]]:
    """Every nonempty selector over all but the last orbit, with its two-graph verdict.

    The verdict is linear: the union is a two-graph iff the selector has even
    overlap with every odd 4-set profile.
    """
    k = len(orbits)
    constraints = parity_constraints(n, orbits, transitive=transitive)
    out = []
    for s in range(1, 1 << (k - 1)):
        ok = all((s & c).bit_count() % 2 == 0 for c in constraints)
        out.append((tuple(i for i in range(k) if (s >> i) & 1), ok))
    return out


def candidate_two_graphs(G: PermGroup) -> tuple[list[Candidate], list[list[int]]]:
    """Steps (a) and (b): candidates with status set, survivors not yet scanned."""
    n = G.degree
    if not is_transitive(G):
        raise ValueError("the pipeline needs a transitive group")
    orbits = orbits_on_triples(G)
    if len(orbits) > MAX_TRIPLE_ORBITS:
        raise BudgetExceeded(f"{len(orbits)} triple orbits; at most {MAX_TRIPLE_ORBITS} are enumerated")
    masks = orbit_masks(orbits)
    cands = []
    for sel, ok in two_graph_selectors(n, orbits, transitive=True):
        size = sum(len(orbits[i]) for i in sel)
        if not ok:
            cands.append(Candidate(sel, size, NOT_TWO_GRAPH))
            continue
        bits = 0
        for i in sel:
            bits |= masks[i]
        t = TripleSet(n, bits)
        assert is_two_graph(t), "linear filter disagrees with the axiom check"
        order = hypergraph_aut(t).order
        cands.append(Candidate(sel, size, PENDING if order == G.order else NOT_FULL, t, order))
    return cands, orbits


def classify_group(G: PermGroup, name: str = "", *, mode: str = "exhaustive",
                   executor: cf.Executor | None = None, shards: int | None = None) -> ClassificationReport:
    """Run steps (a)-(c) for a transitive group G."""
    report = ClassificationReport(name, G.degree, G.order, is_primitive(G))
    cands, _ = candidate_two_graphs(G)
    for c in cands:
        if c.status != PENDING:
            continue
        res = find_trivial_graph(c.two_graph, mode, executor=executor, shards=shards)
        c.scanned = res.scanned
        if res.witness is not None:
            if not validate_witness(c.two_graph, res.witness):
                raise AssertionError("scan kernel reported a witness that does not validate")
            c.status, c.witness = WITNESS, res.witness
        elif res.complete:
            c.status = EXCEPTION
        else:
            raise AssertionError("incomplete scan without a witness")
    report.candidates = cands
    return report


def exception_scan(groups: Sequence[tuple[str, PermGroup]], *, mode: str = "exhaustive",
                   executor: cf.Executor | None = None, shards: int | None = None) -> list[ClassificationReport]:
    """classify_group over a list; a failing group is reported with its error and the scan goes on."""
    out = []
    for name, G in groups:
        try:
            out.append(classify_group(G, name, mode=mode, executor=executor, shards=shards))
        except (BudgetExceeded, ValueError) as exc:
            out.append(ClassificationReport(name, G.degree, G.order, False, [], f"{type(exc).__name__}: {exc}"))
    return out


def exceptional_classes(reports: Sequence[ClassificationReport]) -> list[dict]:
    out = []
    for r in reports:
        for c in r.exceptions():
            out.append({"group": r.group_name, "degree": r.degree, "aut_order": str(c.aut_order),
                        "triples": c.triples, "scanned": c.scanned})
    return out


# -- Type I / Type II -----------------------------------------------------------

@dataclass(frozen=True)
class SwitchingType:
    kind: str  # "I" or "II"
    witness: Graph | None
    aut_order: int

    @property
    def is_type_one(self) -> bool:
        return self.kind == "I"


def _fixed_by_all(rows, n, gens) -> bool:
    from .counting import graph_fixed_by
    return all(graph_fixed_by(rows, n, g.images) for g in gens)


def classify_type(t: TripleSet) -> SwitchingType:
    """Type I iff some member graph has the whole class group as its automorphism group.

    A member has that group iff every generator of it fixes the member.  For
    odd n the even-valency member is always fixed.  For even n the class is
    scanned.
    """
    A = hypergraph_aut(t)
    gens = A.generators
    rep = isolated_vertex_representative(t)
    if t.n % 2 == 1:
        g = even_valency_representative(rep)
        if _fixed_by_all(g.rows, t.n, gens):
            assert graph_aut(g).order == A.order
            return SwitchingType("I", g, A.order)
    for h in switching_class(rep):
        if _fixed_by_all(h.rows, t.n, gens):
            assert graph_aut(h).order == A.order
            return SwitchingType("I", h, A.order)
    return SwitchingType("II", None, A.order)


# -- JSON -------------------------------------------------------------------------

REPORT_SCHEMA = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "type": "object",
    "required": ["group", "candidates"],
    "properties": {
        "group": {
            "type": "object",
            "required": ["name", "degree", "order"],
            "properties": {
                "name": {"type": "string"},
                "degree": {"type": "integer", "minimum": 1, "maximum": 63},
                "order": {"type": "string", "pattern": "^[1-9][0-9]*$"},
                "primitive": {"type": "boolean"},
            },
        },
        "candidates": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["orbits", "triples", "aut_order", "status", "witness", "scanned"],
                "properties": {
                    "orbits": {"type": "array", "items": {"type": "integer", "minimum": 1}, "minItems": 1},
                    "triples": {"type": "integer", "minimum": 0},
                    "aut_order": {"type": ["string", "null"], "pattern": "^[1-9][0-9]*$"},
                    "status": {"enum": list(STATUSES)},
                    "witness": {"type": ["array", "null"], "items": {"type": "integer", "minimum": 1}},
                    "scanned": {"type": "integer", "minimum": 0},
                },
            },
        },
        "error": {"type": "string"},
    },
}
