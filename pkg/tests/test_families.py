import pytest

from edgekempe.classes import RAW, k_prime
from edgekempe.compose import YPlan, y_compose
from edgekempe.families import (
    FamilyError,
    FamilySpec,
    census,
    crossed_prism,
    generate,
    k33,
    k4,
    k_primes,
    kprime_spectrum,
    moebius_ladder,
    one_class_witness,
    prism,
    search_one_class,
    theta,
    u_power,
    y_power,
)
from edgekempe.graph import (
    bridges,
    canonical_form,
    find_edge_cuts,
    from_graph6,
    is_bipartite,
    is_isomorphic,
    is_planar,
    to_graph6,
    validate_cubic,
)
from oracles import count_connected_cubic, kempe_components, proper_colorings, two_colorable


@pytest.mark.parametrize("k", range(3, 9))
def test_ladders_and_prisms(k):
    ml, pr = moebius_ladder(k), prism(k)
    assert ml.n == pr.n == 2 * k
    assert validate_cubic(ml) and validate_cubic(pr)
    assert (is_bipartite(ml) is not None) == (k % 2 == 1) == two_colorable(ml.n, ml.edges)
    assert (is_bipartite(pr) is not None) == (k % 2 == 0) == two_colorable(pr.n, pr.edges)


@pytest.mark.parametrize("k", range(2, 9))
def test_crossed_prisms(k):
    g = crossed_prism(k)
    assert g.n == 4 * k and validate_cubic(g) and g.is_simple()
    assert is_bipartite(g) is not None


def test_named_graphs():
    assert is_isomorphic(moebius_ladder(3), k33())
    assert is_isomorphic(from_graph6("C~"), k4())
    assert validate_cubic(theta())


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_y_power_size(k):
    g = generate(FamilySpec("y_power_k33", k))
    assert g.n == 4 * k + 2 and validate_cubic(g)
    assert is_bipartite(g) is not None


def test_y_power_matches_fold():
    g = y_compose(YPlan.default(y_compose(YPlan.default(k33(), k33(), 0, 0)), k33(), 0, 0))
    assert generate(FamilySpec("y_power_k33", 3)) == g
    assert generate(FamilySpec("y_power_of", 2, k4())) == y_power(k4(), 2)


def test_family_aliases_and_errors():
    assert generate(FamilySpec("ml", 4)) == moebius_ladder(4)
    assert generate(FamilySpec("k3,3")) == k33()
    with pytest.raises(FamilyError):
        FamilySpec("prism", 2)
    with pytest.raises(FamilyError):
        FamilySpec("crossed_prism", 1)
    with pytest.raises(FamilyError):
        FamilySpec("moebius_ladder", 0)
    with pytest.raises(FamilyError):
        FamilySpec("petersen", 1)
    with pytest.raises(FamilyError):
        FamilySpec("y_power_of", 2)


# ---------------------------------------------------------------- census


@pytest.mark.parametrize("n", [4, 6, 8])
def test_census_counts_against_brute_force(n):
    assert sum(1 for _ in census(n, min_n=n)) == count_connected_cubic(n)


def test_census_count_ten():
    assert sum(1 for _ in census(10, min_n=10)) == 19


@pytest.mark.slow
def test_census_count_twelve():
    assert sum(1 for _ in census(12, min_n=12)) == 85


def test_multigraph_census_counts():
    counts = [sum(1 for _ in census(n, simple=False, min_n=n)) for n in (2, 4, 6, 8, 10)]
    assert counts == [1, 2, 6, 20, 91]


def test_census_properties():
    graphs = list(census(10, simple=False))
    assert [g.n for g in graphs] == sorted(g.n for g in graphs)
    for g in graphs:
        assert validate_cubic(g)
        assert all(a != b for a, b in g.edges)
        assert canonical_form(g) == canonical_form(g.relabel(list(reversed(range(g.n)))))
        if is_bipartite(g) is not None:
            assert not bridges(g)


def test_census_filters():
    everything = list(census(10))
    bip = list(census(10, bipartite=True))
    planar_bip = list(census(10, bipartite=True, planar=True))
    assert bip == [g for g in everything if is_bipartite(g) is not None]
    assert planar_bip == [g for g in bip if is_planar(g)]
    assert [to_graph6(g) for g in census(10, bipartite=True, planar=False)] == ["Es\\o", "Is\\@?_F@o", "IsXP?_J@o"]
    assert list(census(1)) == []
    assert [g.n for g in census(7, min_n=6)] == [6, 6]


def test_census_guard():
    with pytest.raises(FamilyError):
        list(census(16))


def test_census_is_deterministic():
    assert [g.edges for g in census(10)] == [g.edges for g in census(10)]


# ---------------------------------------------------------------- K' searches


def test_small_spectrum_table():
    rep = kprime_spectrum(8)
    assert rep.counts == {1: 6, 2: 2}
    assert rep.witnesses == {1: "C~", 2: "Es\\o"}
    # the 8-vertex two-class graph, confirmed on the raw space by union-find
    g = from_graph6("G]o_g[")
    assert kempe_components(g.n, list(g.edges), sorted(proper_colorings(g.n, g.edges))) == 2


def test_bipartite_spectrum_has_four():
    rep = kprime_spectrum(10, bipartite=True)
    assert rep.counts == {1: 1, 2: 2, 4: 1}
    four = from_graph6(rep.witnesses[4])
    assert is_isomorphic(four, y_power(k33(), 2))


def test_k_primes_parallel_matches_serial():
    graphs = list(census(8, min_n=6))
    assert k_primes(graphs, jobs=2) == k_primes(graphs, jobs=1)


def test_search_one_class_ten_is_empty():
    assert search_one_class(10) == []


def test_search_one_class_twelve():
    found = search_one_class(12, jobs=2)
    assert [to_graph6(g) for g in found] == ["KsX@?_OAWM?s"]
    u = one_class_witness()
    assert is_isomorphic(u, found[0])
    assert u.n == 12 and is_bipartite(u) is not None and not is_planar(u) and u.is_simple()
    assert k_prime(u, 3) == 1 == k_prime(u, 3, RAW)
    assert search_one_class(12, three_connected=True) == found
    assert not find_edge_cuts(u, 2, nontrivial_only=True)


def test_u_power_sizes():
    assert u_power(1) == one_class_witness()
    assert u_power(2).n == 22 and u_power(3).n == 32
    assert is_bipartite(u_power(2)) is not None and not is_planar(u_power(2))
