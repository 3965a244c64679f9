"""Counting on subsets, on the switching module W and on switching classes.

W is the binary permutation module modulo the all-ones vector; its vectors
are the switchings up to complementation.  Every Burnside sum here is exact
integer arithmetic and the final division is asserted, never rounded.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, log2

from . import _kernels
from .budget import BudgetExceeded, bitmap_budget
from .graphs import Graph, VertexSet, switching_class
from .perm import PermGroup, cycle_stats


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % d for d in range(2, int(p**0.5) + 1))


def _cycle_lengths(g) -> tuple[int, ...]:
    return cycle_stats(g).cycle_lengths


def element_order(g) -> int:
    out = 1
    for ln in _cycle_lengths(g):
        out = out * ln // gcd(out, ln)
    return out


def smallest_prime_factor(m: int) -> int:
    for p in range(2, m + 1):
        if m % p == 0:
            return p
    raise ValueError("identity has no prime divisor")


def lemma_bound(g, p: int) -> Fraction:
    """n/p + (p-1)/p * fix(g), an upper bound for the cycle count of g."""
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    if element_order(g) % p:
        raise ValueError(f"{p} does not divide the order of the element")
    st = cycle_stats(g)
    n = sum(st.cycle_lengths)
    return Fraction(n, p) + Fraction(p - 1, p) * st.fix


def fixed_subsets(g) -> int:
    """Number of subsets X with X^g = X."""
    return 2 ** cycle_stats(g).orb


def fix_W(g) -> int:
    """Fixed vectors of g on W.

    v + v^g lies in {0, e}.  The 0 case gives 2^orb vectors; the e case needs
    v to alternate along every cycle, so it is possible (2^orb ways) only when
    all cycles are even.  Each class of W holds two vectors.
    """
    st = cycle_stats(g)
    even = all(ln % 2 == 0 for ln in st.cycle_lengths)
    return 2 ** (st.orb - 1) * (2 if even else 1)


def _stats(G: PermGroup, budget=None):
    """(orb, fix, order) for every element, through the enumeration budget."""
    for g in G.elements(budget):
        st = cycle_stats(g)
        order = 1
        for ln in st.cycle_lengths:
            order = order * ln // gcd(order, ln)
        yield st.orb, st.fix, order, st.cycle_lengths


def _exact_div(total: int, order: int, what: str) -> int:
    q, r = divmod(total, order)
    assert r == 0, f"Burnside sum for {what} not divisible by |G|"
    return q


def orbits_on_switching_classes(G: PermGroup) -> int:
    """G-orbits on the members of a G-invariant switching class, i.e. on W."""
    total = 0
    for orb, _, _, lens in _stats(G):
        total += 2 ** (orb - 1) * (2 if all(ln % 2 == 0 for ln in lens) else 1)
    return _exact_div(total, G.order, "W")


def orbits_on_subsets(G: PermGroup) -> int:
    return _exact_div(sum(2**orb for orb, *_ in _stats(G)), G.order, "2^Omega")


def pair_cycles(g) -> int:
    """Number of cycles of g on unordered pairs of points."""
    lens = _cycle_lengths(g)
    total = sum(ln // 2 for ln in lens)
    for i, a in enumerate(lens):
        for b in lens[i + 1:]:
            total += gcd(a, b)
    return total


def fixed_switching_classes(g) -> int:
    """How many switching classes on the points are fixed by g.

    Each fixed class holds exactly fix_W(g) fixed graphs and every fixed
    graph lies in a fixed class, so the count is 2^(pair cycles) / fix_W(g).
    """
    q, r = divmod(2 ** pair_cycles(g), fix_W(g))
    assert r == 0
    return q


def orbits_on_all_switching_classes(G: PermGroup) -> int:
    """G-orbits on the set of all switching classes (equivalently two-graphs) on the points.

    For the symmetric group this counts switching classes up to isomorphism.
    """
    total = sum(fixed_switching_classes(g) for g in G.elements())
    return _exact_div(total, G.order, "switching classes")


@dataclass(frozen=True)
class OrbitCountReport:
    group_order: int
    orbits_on_powerset: int
    orbits_on_module_W: int
    self_complementary_orbits: int

    def as_dict(self) -> dict:
        return {
            "group_order": str(self.group_order),
            "orbits_on_powerset": self.orbits_on_powerset,
            "orbits_on_module_W": self.orbits_on_module_W,
            "self_complementary_orbits": self.self_complementary_orbits,
        }


def orbit_report(G: PermGroup) -> OrbitCountReport:
    ps = w = 0
    for orb, _, _, lens in _stats(G):
        ps += 2**orb
        w += 2 ** (orb - 1) * (2 if all(ln % 2 == 0 for ln in lens) else 1)
    ps = _exact_div(ps, G.order, "2^Omega")
    w = _exact_div(w, G.order, "W")
    sc = 2 * w - ps
    assert sc >= 0
    return OrbitCountReport(G.order, ps, w, sc)


def is_g2(order: int, fix: int) -> bool:
    """2-power order greater than 1 with no fixed point."""
    return order > 1 and order & (order - 1) == 0 and fix == 0


@dataclass(frozen=True)
class Type2Report:
    lhs: Fraction
    rhs: Fraction
    holds: bool
    relaxed_lhs: float
    relaxed_rhs: float
    relaxed_holds: bool

    def as_dict(self) -> dict:
        return {
            "lhs": str(self.lhs), "rhs": str(self.rhs), "holds": self.holds,
            "relaxed_lhs": self.relaxed_lhs, "relaxed_rhs": self.relaxed_rhs,
            "relaxed_holds": self.relaxed_holds,
        }


def type2_inequality(G: PermGroup) -> Type2Report:
    """Necessary condition for a switching class with group G to have no regular member.

    2^n/|G| <= (1/2) (sum_g 2^orb(g) / |G| + sum_{g in G2} 2^orb(g)), and the
    relaxed form 2^n <= 2^(11n/14) |G| + 2^(n/2) |G|^2.
    """
    n, order = G.degree, G.order
    total = g2 = 0
    for orb, fix, o, _ in _stats(G):
        total += 2**orb
        if is_g2(o, fix):
            g2 += 2**orb
    lhs = Fraction(2**n, order)
    rhs = Fraction(1, 2) * (Fraction(total, order) + g2)
    rl = float(2**n)
    rr = 2 ** (11 * n / 14) * order + 2 ** (n / 2) * order**2
    return Type2Report(lhs, rhs, lhs <= rhs, rl, rr, rl <= rr)


def maroti_bound(n: int) -> tuple[int, int]:
    """(n * prod_{i < floor(log2 n)} (n - 2^i), n^(1 + floor(log2 n)))."""
    if n < 2:
        raise ValueError("n must be at least 2")
    k = n.bit_length() - 1
    prod_form = n
    for i in range(k):
        prod_form *= n - 2**i
    return prod_form, n ** (1 + k)


def maroti_log_bound(n: int) -> float:
    """n^(1 + log2 n) with the real logarithm, the form used in the asymptotic step."""
    return n ** (1 + log2(n))


# -- regular orbit on the power set ---------------------------------------------

MAX_REGULAR_DEGREE = 24


def _prime_order_partitions(G: PermGroup) -> list[list[int]]:
    """Cycle partitions (as masks) of prime-order elements, deduplicated."""
    seen = set()
    out = []
    for g in G.elements():
        st = cycle_stats(g)
        lens = set(st.cycle_lengths) - {1}
        if len(lens) != 1 or not _is_prime(next(iter(lens))):
            continue
        masks = tuple(sorted(sum(1 << x for x in c) for c in g.cycles()))
        if masks not in seen:
            seen.add(masks)
            out.append(list(masks))
    return out


def regular_subset_orbit(G: PermGroup, *, max_size: int | None = None) -> VertexSet | None:
    """Least subset (as an integer mask) whose setwise stabiliser is trivial.

    Any nontrivial stabiliser contains an element of prime order, so marking
    the invariant subsets of prime-order elements marks exactly the subsets
    with nontrivial stabiliser.  ``max_size`` restricts the answer to subsets
    of at most that many points.
    """
    n = G.degree
    if n > MAX_REGULAR_DEGREE:
        raise BudgetExceeded(f"regular-orbit search is limited to degree {MAX_REGULAR_DEGREE}")
    if 2**n > bitmap_budget():
        raise BudgetExceeded(f"bitmap of 2^{n} bits exceeds budget {bitmap_budget()}")
    if G.order == 1:
        return VertexSet(n, 0)
    if max_size is not None and max_size < 0:
        return None
    parts = _prime_order_partitions(G)
    work = sum(2 ** len(p) for p in parts)
    if work > 16 * bitmap_budget():
        raise BudgetExceeded(f"{work} subset marks exceed budget {16 * bitmap_budget()}")
    bitmap = bytearray(max(1, 2**n // 8))
    for masks in parts:
        _kernels.mark_subsets(bitmap, masks)
    for i, byte in enumerate(bitmap):
        if byte != 0xFF:
            for b in range(8):
                x = 8 * i + b
                if x < 2**n and not (byte >> b) & 1:
                    if max_size is None or x.bit_count() <= max_size:
                        return VertexSet(n, x)
    return None


def setwise_stabilizer_is_trivial(G: PermGroup, x: int) -> bool:
    """Direct check by enumeration (oracle for the bitmap search)."""
    for g in G.elements():
        if g.is_identity():
            continue
        img = 0
        for v in range(G.degree):
            if (x >> v) & 1:
                img |= 1 << g.images[v]
        if img == x:
            return False
    return True


def seress_list() -> list[dict]:
    from .catalog import SERESS_LIST
    return [{"degree": e.degree, "gap_id": e.gap_id, "name": e.name} for e in SERESS_LIST]


# -- Mallows-Sloane: fixed graphs in an invariant switching class ---------------

def graph_fixed_by(rows, n: int, img) -> bool:
    for u in range(n):
        r = rows[u]
        m = 0
        while r:
            low = r & -r
            m |= 1 << img[low.bit_length() - 1]
            r ^= low
        if m != rows[img[u]]:
            return False
    return True


def fixed_graphs_in_class(g: Graph, p) -> int:
    """How many members of the switching class of g are fixed by p (direct scan)."""
    img = p.images if hasattr(p, "images") else p
    return sum(1 for h in switching_class(g) if graph_fixed_by(h.rows, g.n, img))
