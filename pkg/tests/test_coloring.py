from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from edgekempe.coloring import (
    ColoringError,
    EdgeColoring,
    ParityError,
    Switch,
    all_chains,
    apply_switch,
    cut_color_check,
    enumerate_colorings,
    iter_colorings,
    kempe_chain,
    parse_coloring,
)
from edgekempe.families import census, k33, k4, moebius_ladder, prism, theta
from edgekempe.graph import MultiGraph, find_edge_cuts, make_cut
from oracles import proper_colorings


@pytest.mark.parametrize("g, count", [(theta(), 6), (k33(), 12), (k4(), 6), (prism(3), 6)])
def test_coloring_counts(g, count):
    cols = enumerate_colorings(g, 3)
    assert len(cols) == count
    assert [c.colors for c in cols] == sorted(proper_colorings(g.n, g.edges))


def test_fixed_vertex_counts():
    assert len(enumerate_colorings(k33(), 3, fix_vertex=0)) == 2
    pinned = enumerate_colorings(k33(), 3, fix_vertex=0)
    for c in pinned:
        assert [c.colors[e] for e in k33().incidence[0]] == [0, 1, 2]


def test_fixed_vertex_is_one_sixth(census10):
    for g in census10:
        full = sum(1 for _ in iter_colorings(g, 3))
        pinned = sum(1 for _ in iter_colorings(g, 3, fix_vertex=g.n - 1))
        assert full % 6 == 0 and pinned == full // 6


def test_too_few_colours_gives_nothing():
    assert enumerate_colorings(k33(), 2) == []
    assert enumerate_colorings(k33(), 2, fix_vertex=0) == []


def test_four_colour_count_matches_oracle():
    g = k4()
    assert len(enumerate_colorings(g, 4)) == len(proper_colorings(g.n, g.edges, 4))


def test_bridged_graph_has_no_colourings():
    # two digon-with-pendant blocks joined by a bridge
    g = MultiGraph(6, ((0, 1), (0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (3, 5), (4, 5), (4, 5)))
    assert proper_colorings(g.n, g.edges) == []
    assert enumerate_colorings(g, 3) == []


def test_improper_rejected():
    with pytest.raises(ColoringError):
        EdgeColoring(theta(), (0, 0, 1))
    with pytest.raises(ColoringError):
        EdgeColoring(theta(), (0, 1))
    with pytest.raises(ColoringError):
        EdgeColoring(theta(), (0, 1, 3))


def test_parse_coloring_forms():
    g = theta()
    assert parse_coloring(g, "0 1 2").colors == (0, 1, 2)
    assert parse_coloring(g, "2,1,0").colors == (2, 1, 0)
    c = parse_coloring(g, '{"n": 4, "colors": [3, 1, 0]}')
    assert c.n == 4 and c.colors == (3, 1, 0)
    assert parse_coloring(g, c.to_json()) == c
    with pytest.raises(ColoringError):
        parse_coloring(g, "a b c")


# ---------------------------------------------------------------- chains


def test_theta_chain():
    c = EdgeColoring(theta(), (0, 1, 2))
    ch = kempe_chain(c, (0, 1), 0)
    assert ch.edge_ids == (0, 1) and ch.key == ((0, 1), 0)
    assert len(all_chains(c, (1, 0))) == 1


def test_seed_colour_must_be_in_pair():
    with pytest.raises(ColoringError):
        kempe_chain(EdgeColoring(theta(), (0, 1, 2)), (0, 1), 2)


def test_k33_chains_are_hamiltonian():
    for c in enumerate_colorings(k33(), 3, fix_vertex=0):
        for pair in ((0, 1), (0, 2), (1, 2)):
            chains = all_chains(c, pair)
            assert len(chains) == 1
            assert len(chains[0]) == 6 and chains[0].vertices(c.graph) == set(range(6))


def test_k33_switch_is_a_colour_transposition():
    for c in enumerate_colorings(k33(), 3):
        for pair in ((0, 1), (0, 2), (1, 2)):
            d = apply_switch(c, Switch(pair, c.colors.index(pair[0])))
            swap = {pair[0]: pair[1], pair[1]: pair[0]}
            assert d.colors == tuple(swap.get(x, x) for x in c.colors)


def _chains_by_oracle(g, colors, pair):
    import networkx as nx

    h = nx.MultiGraph()
    h.add_edges_from(e for i, e in enumerate(g.edges) if colors[i] in pair)
    return nx.number_connected_components(h)


def test_prism3_chains_all_hamiltonian():
    # Pr_3 has one colouring up to renaming, with rainbow rungs and every pair a 6-cycle
    g = prism(3)
    for c in enumerate_colorings(g, 3):
        assert len({c.colors[e] for e in (6, 7, 8)}) == 3
        for p in ((0, 1), (0, 2), (1, 2)):
            assert len(all_chains(c, p)) == _chains_by_oracle(g, c.colors, p) == 1


def test_prism4_has_a_split_pair():
    g = prism(4)
    splits = 0
    for c in enumerate_colorings(g, 3):
        for p in ((0, 1), (0, 2), (1, 2)):
            n = len(all_chains(c, p))
            assert n == _chains_by_oracle(g, c.colors, p)
            splits += n >= 2
    assert splits > 0


def test_chain_walk_order():
    c = EdgeColoring(prism(4), next(iter_colorings(prism(4), 3)))
    g = c.graph
    for pair in ((0, 1), (0, 2), (1, 2)):
        for ch in all_chains(c, pair):
            seed = ch.edge_ids[0]
            ch2 = kempe_chain(c, pair, seed)
            assert ch2.edge_ids == ch.edge_ids
            if len(ch) > 2:
                lo = min(g.edges[seed])
                assert lo in g.edges[ch.edge_ids[1]]


def _chain_invariants(c):
    g = c.graph
    for pair in ((0, 1), (0, 2), (1, 2)):
        chains = all_chains(c, pair)
        covered = Counter(e for ch in chains for e in ch.edge_ids)
        assert set(covered) == {e for e in range(g.m) if c.colors[e] in pair}
        assert max(covered.values()) == 1
        verts = [ch.vertices(g) for ch in chains]
        for i in range(len(verts)):
            for j in range(i + 1, len(verts)):
                assert not verts[i] & verts[j]
        for ch in chains:
            assert len(ch) % 2 == 0
            # maximal: every chain vertex sees both colours of the pair inside the chain
            for v in ch.vertices(g):
                assert {c.colors[e] for e in g.incidence[v] if e in ch.edge_ids} == set(pair)


def test_chain_invariants_on_census():
    for g in census(8, simple=False, min_n=2):
        for colors in list(iter_colorings(g, 3))[:24]:
            _chain_invariants(EdgeColoring(g, colors))


COLOURED = [(g, cols) for g in (theta(), k4(), k33(), prism(4), moebius_ladder(4))
            for cols in enumerate_colorings(g, 3)]


@settings(max_examples=80, deadline=None)
@given(st.sampled_from(COLOURED), st.sampled_from([(0, 1), (0, 2), (1, 2)]), st.integers(0, 100))
def test_switch_is_a_proper_involution(item, pair, k):
    _, c = item
    seeds = [e for e, x in enumerate(c.colors) if x in pair]
    s = Switch(pair, seeds[k % len(seeds)])
    d = apply_switch(c, s)
    chain = set(kempe_chain(c, pair, s.seed).edge_ids)
    for e in range(c.graph.m):
        if e in chain:
            assert {c.colors[e], d.colors[e]} == set(pair)
        else:
            assert c.colors[e] == d.colors[e]
    assert apply_switch(d, s) == c


def test_theta_switch_example():
    c = EdgeColoring(theta(), (0, 1, 2))
    assert apply_switch(c, Switch((1, 0), 0)).colors == (1, 0, 2)
    assert c.colors == (0, 1, 2)


def test_stale_switch_rejected():
    c = EdgeColoring(theta(), (0, 1, 2))
    with pytest.raises(ColoringError):
        apply_switch(c, Switch((0, 1), 2))
    with pytest.raises(ColoringError):
        apply_switch(c, Switch((0, 1), 9))
    with pytest.raises(ValueError):
        Switch((1, 1), 0)


# ---------------------------------------------------------------- parity


def test_prism_rung_cut_rainbow():
    cut = make_cut(prism(3), (6, 7, 8))
    for c in enumerate_colorings(prism(3), 3):
        assert cut_color_check(c, cut) == Counter({0: 1, 1: 1, 2: 1})


def test_theta_h_theta_cut_monochromatic(theta_h_theta):
    (cut,) = find_edge_cuts(theta_h_theta, 2, nontrivial_only=True)
    cols = enumerate_colorings(theta_h_theta, 3)
    assert cols
    for c in cols:
        assert len(cut_color_check(c, cut)) == 1


def test_vertex_star_rainbow():
    g = k33()
    c = enumerate_colorings(g, 3)[0]
    for v in range(g.n):
        cut = make_cut(g, g.incidence[v])
        assert sorted(cut_color_check(c, cut)) == [0, 1, 2]


def test_four_colourings_exempt_from_parity():
    g = prism(3)
    cut = make_cut(g, (6, 7, 8))
    for c in enumerate_colorings(g, 4):
        assert sum(cut_color_check(c, cut).values()) == 3


def test_parity_error_is_detected_for_bad_cut_object():
    from edgekempe.graph import EdgeCut

    g = prism(3)
    c = enumerate_colorings(g, 3)[0]
    # edges 0 and 1 share vertex 1, so they can never be monochromatic
    bogus = EdgeCut((0, 1), frozenset({1}), frozenset(range(g.n)) - {1}, False)
    with pytest.raises(ParityError):
        cut_color_check(c, bogus)
