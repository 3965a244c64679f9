from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from switchscan.budget import BudgetExceeded
from switchscan.catalog import catalog_entries, catalog_group
from switchscan.counting import (element_order, fix_W, fixed_subsets, lemma_bound, maroti_bound,
                                 maroti_log_bound, orbit_report, orbits_on_all_switching_classes,
                                 orbits_on_subsets, orbits_on_switching_classes, pair_cycles,
                                 regular_subset_orbit, seress_list, setwise_stabilizer_is_trivial,
                                 smallest_prime_factor, type2_inequality)
from switchscan.perm import Permutation, cycle_stats, group_from_generators, identity, symmetric_group

BIG = 10**6
ENUMERABLE = [e.name for e in catalog_entries(include_slow=True) if e.order <= BIG]


def test_fix_w_examples():
    assert fix_W(identity(5)) == 16
    assert fix_W(Permutation([1, 0, 3, 2])) == 4      # two 2-cycles, all even
    assert fix_W(Permutation([1, 2, 3, 4, 0])) == 1   # one 5-cycle
    assert fix_W(Permutation([1, 0, 2])) == 2
    assert fixed_subsets(Permutation([1, 0, 2])) == 4


@given(st.integers(2, 9).flatmap(lambda n: st.permutations(list(range(n)))))
def test_fix_w_brute_force_random(images):
    assert fix_W(Permutation(images)) == oracles.fix_w_counts(len(images), [images])[0]


@given(st.integers(2, 9).flatmap(lambda n: st.permutations(list(range(n)))))
def test_pair_cycles_brute_force(images):
    n = len(images)
    pairs = {frozenset((a, b)) for a in range(n) for b in range(a)}
    seen, cycles = set(), 0
    for p in pairs:
        if p in seen:
            continue
        cycles += 1
        while p not in seen:
            seen.add(p)
            p = frozenset(images[x] for x in p)
    assert pair_cycles(Permutation(images)) == cycles


@pytest.mark.parametrize("name", ENUMERABLE)
def test_lemma_bound_all_elements(name):
    G = catalog_group(name)
    for g in G.elements():
        if g.is_identity():
            continue
        p = smallest_prime_factor(element_order(g))
        assert cycle_stats(g).orb <= lemma_bound(g, p)


def test_lemma_bound_examples_and_errors():
    g = Permutation([1, 2, 0, 3, 4])
    assert lemma_bound(g, 3) == Fraction(5, 3) + Fraction(2, 3) * 2
    with pytest.raises(ValueError):
        lemma_bound(g, 4)
    with pytest.raises(ValueError):
        lemma_bound(g, 2)
    with pytest.raises(ValueError):
        smallest_prime_factor(1)


@pytest.mark.parametrize("name", [e.name for e in catalog_entries(include_slow=True)])
def test_orbit_report_identity(name):
    G = catalog_group(name)
    if G.order > 10**7:
        with pytest.raises(BudgetExceeded):
            orbit_report(G)
        return
    r = orbit_report(G)
    assert min(r.orbits_on_powerset, r.orbits_on_module_W, r.self_complementary_orbits) >= 0
    assert 2 * r.orbits_on_module_W == r.orbits_on_powerset + r.self_complementary_orbits


@pytest.mark.parametrize("name", [e.name for e in catalog_entries(10)])
def test_orbits_on_subsets_by_partition(name):
    G = catalog_group(name)
    n = G.degree
    uf = oracles.UnionFind(1 << n)
    for v in range(1 << n):
        for g in G.generators:
            uf.union(v, sum(1 << g.images[i] for i in range(n) if (v >> i) & 1))
    assert orbits_on_subsets(G) == uf.count()


def test_orbits_on_switching_classes_examples():
    assert orbits_on_switching_classes(catalog_group("d10")) == 4
    assert orbits_on_switching_classes(group_from_generators([identity(5)])) == 16
    assert [orbits_on_switching_classes(symmetric_group(n)) for n in range(4, 8)] == [3, 3, 4, 4]


def test_orbits_on_all_switching_classes_symmetric():
    assert [orbits_on_all_switching_classes(symmetric_group(n)) for n in range(2, 9)] == [1, 2, 3, 7, 16, 54, 243]


@pytest.mark.parametrize("name", [e.name for e in catalog_entries(7)])
def test_orbits_on_all_switching_classes_by_partition(name):
    G = catalog_group(name)
    assert orbits_on_all_switching_classes(G) == oracles.orbits_on_two_graphs(
        G.degree, [g.images for g in G.generators])


def test_type2_inequality():
    r = type2_inequality(catalog_group("d10"))
    assert r.lhs == Fraction(32, 10) and r.rhs >= r.lhs and r.holds
    assert type2_inequality(catalog_group("psigmal_2_9")).holds
    r = type2_inequality(catalog_group("psl_2_17"))
    assert r.lhs > r.rhs and not r.holds
    assert set(r.as_dict()) >= {"lhs", "rhs", "holds"}


def test_maroti_bound():
    assert maroti_bound(4) == (24, 64)
    assert maroti_bound(16)[0] == 322560 == catalog_group("agl_4_2").order
    with pytest.raises(ValueError):
        maroti_bound(1)
    # product-action and Mathieu groups are exempt from the bound
    exempt = {"s3wrs2", "a5_on_pairs", "s5_on_pairs", "m11", "m11_on_12", "m12"}
    for e in catalog_entries(include_slow=True):
        if e.name not in exempt:
            assert e.order <= maroti_bound(e.degree)[1], e.name
    assert catalog_group("m12").order > maroti_bound(12)[1]
    assert maroti_log_bound(16) == 16**5


def brute_least_regular(G):
    for x in range(1 << G.degree):
        if setwise_stabilizer_is_trivial(G, x):
            return x
    return None


@pytest.mark.parametrize("name", [e.name for e in catalog_entries(10)])
def test_regular_orbit_matches_enumeration(name):
    G = catalog_group(name)
    x = regular_subset_orbit(G)
    assert (None if x is None else x.mask) == brute_least_regular(G)


def test_regular_orbit_trivial_group_and_budgets():
    assert regular_subset_orbit(group_from_generators([identity(6)])).mask == 0
    with pytest.raises(BudgetExceeded):
        regular_subset_orbit(catalog_group("psigmal_2_25"))
    with pytest.raises(BudgetExceeded):
        regular_subset_orbit(catalog_group("agl_5_2"))


def test_regular_orbit_budget_env(monkeypatch):
    monkeypatch.setenv("SWITCHSCAN_BUDGET", "bitmap=512")
    with pytest.raises(BudgetExceeded):
        regular_subset_orbit(catalog_group("a5_on_pairs"))
    monkeypatch.setenv("SWITCHSCAN_BUDGET", "elements=5")
    with pytest.raises(BudgetExceeded):
        orbit_report(catalog_group("d10"))


def test_seress_list():
    rows = seress_list()
    assert len(rows) == 43
    assert max(r["degree"] for r in rows) == 32
    assert len([r for r in rows if r["degree"] == 16]) == 5
    assert rows[0] == {"degree": 5, "gap_id": 2, "name": "D10"}


def test_so4minus_16_has_no_small_regular_subset():
    G = catalog_group("so4minus_16")
    assert regular_subset_orbit(G, max_size=7) is None
    x = regular_subset_orbit(G)
    assert x is not None and len(x) == 8 and setwise_stabilizer_is_trivial(G, x.mask)
