from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import closure
from switchscan.budget import BudgetExceeded
from switchscan.catalog import catalog_entries, catalog_group, dihedral, grid_group
from switchscan.perm import (Permutation, PermGroup, block_system, compose, cycle_stats, format_group,
                             group_from_generators, identity, is_primitive, is_transitive, orbit,
                             orbits_on_triples, parse_group, read_group_file, symmetric_group,
                             write_group_file)
from switchscan.subsets import all_triples, subset_rank, subset_unrank, triple_rank

perms = st.integers(2, 9).flatmap(lambda n: st.permutations(list(range(n))))


def test_identity_and_compose():
    e = identity(4)
    p = Permutation([1, 2, 3, 0])
    assert compose(e, p) == p == compose(p, e)
    assert compose(p, p.inverse()).is_identity()
    # compose(p, q) applies p first
    q = Permutation([1, 0, 2, 3])
    assert compose(p, q).images == tuple(q.images[p.images[i]] for i in range(4))


def test_bad_permutations():
    with pytest.raises(ValueError):
        Permutation([0, 0, 1])
    with pytest.raises(ValueError):
        identity(0)
    with pytest.raises(ValueError):
        compose(identity(3), identity(4))


def test_cycle_stats_examples():
    st_ = cycle_stats(Permutation.from_cycles(6, [(0, 1, 2), (3, 4)]))
    assert (st_.orb, st_.fix, st_.cycle_lengths) == (3, 1, (3, 2, 1))
    assert cycle_stats(identity(5)).orb == 5


@given(perms)
def test_inverse_roundtrip(images):
    p = Permutation(images)
    assert compose(p, p.inverse()).is_identity()
    assert p.power(p.order()).is_identity()
    assert sum(cycle_stats(p).cycle_lengths) == len(images)


@given(st.integers(2, 8).flatmap(lambda n: st.tuples(*[st.permutations(list(range(n)))] * 3)))
def test_compose_associative(t):
    a, b, c = (Permutation(x) for x in t)
    assert compose(compose(a, b), c) == compose(a, compose(b, c))


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 7).flatmap(lambda n: st.lists(st.permutations(list(range(n))), min_size=1, max_size=3)))
def test_schreier_sims_matches_closure(gens):
    n = len(gens[0])
    G = group_from_generators([Permutation(g) for g in gens])
    els = closure(n, [tuple(g) for g in gens])
    assert G.order == len(els)
    assert {g.images for g in G.elements()} == els
    for x in list(els)[:20]:
        assert G.contains(Permutation(x))


def test_symmetric_group_orders():
    assert [symmetric_group(n).order for n in range(1, 8)] == [1, 2, 6, 24, 120, 720, 5040]


def test_elements_identity_first_and_budget():
    G = dihedral(5)
    els = list(G.elements())
    assert els[0].is_identity() and len(set(els)) == 10
    with pytest.raises(BudgetExceeded):
        list(symmetric_group(8).elements(budget=100))


@pytest.mark.parametrize("name", [e.name for e in catalog_entries(12)])
def test_small_catalog_orders_by_closure(name):
    G = catalog_group(name)
    if G.order > 20000:
        pytest.skip("closure oracle kept to small groups")
    assert len(closure(G.degree, [g.images for g in G.generators])) == G.order


def test_orbit_of_points_and_subsets():
    G = dihedral(5)
    assert orbit(G, 0) == set(range(5))
    assert len(orbit(G, frozenset({0, 1}))) == 5
    assert len(orbit(G, frozenset({0, 2}))) == 5


def test_orbits_on_triples_partition():
    for G, expect in ((dihedral(5), [5, 5]), (symmetric_group(6), [20]), (grid_group(3), None)):
        orbits = orbits_on_triples(G)
        flat = sorted(r for o in orbits for r in o)
        assert flat == list(range(len(all_triples(G.degree))))
        if expect:
            assert sorted(map(len, orbits)) == expect


def test_primitivity():
    assert is_primitive(dihedral(5))
    square = group_from_generators([Permutation([1, 2, 3, 0])])
    assert is_transitive(square) and not is_primitive(square)
    assert block_system(square) is not None
    two = group_from_generators([Permutation([1, 0, 2])])
    assert not is_transitive(two)


def test_group_file_roundtrip(tmp_path):
    G = catalog_group("psl_2_7")
    path = tmp_path / "g.txt"
    write_group_file(G, path)
    H = read_group_file(path)
    assert H.order == G.order and H.generators == G.generators
    assert parse_group(format_group(G)).order == 168
    with pytest.raises(ValueError):
        parse_group("3\n1 2\n")


@given(st.integers(3, 12).flatmap(lambda n: st.sets(st.integers(0, n - 1), min_size=3, max_size=3)))
def test_triple_rank_roundtrip(s):
    a, b, c = sorted(s)
    r = triple_rank(a, b, c)
    assert subset_unrank(r, 3) == (a, b, c)
    assert subset_rank((a, b, c)) == r


def test_permgroup_degree_checks():
    with pytest.raises(ValueError):
        PermGroup(3, [identity(4)])
