"""Named cubic graphs, a small cubic census, and K' searches over it."""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from typing import Iterator

from .classes import k_prime
from .compose import YPlan, y_compose
from .graph import (
    bridges,
    MultiGraph,
    canonical_form,
    canonical_graph,
    from_graph6,
    is_bipartite,
    is_planar,
    to_graph6,
)

KINDS = ("k33", "k4", "theta", "moebius_ladder", "prism", "crossed_prism", "y_power_k33", "y_power_of")
ALIASES = {"ml": "moebius_ladder", "pr": "prism", "cpr": "crossed_prism", "k3,3": "k33"}
MIN_K = {"moebius_ladder": 3, "prism": 3, "crossed_prism": 2, "y_power_k33": 1, "y_power_of": 1}
MAX_CENSUS_N = 14


class FamilyError(ValueError):
    pass


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    k: int = 1
    base: MultiGraph | None = None

    def __post_init__(self) -> None:
        kind = ALIASES.get(self.kind, self.kind)
        object.__setattr__(self, "kind", kind)
        if kind not in KINDS:
            raise FamilyError(f"unknown family {self.kind!r}; expected one of {', '.join(KINDS)}")
        if self.k < MIN_K.get(kind, 1):
            raise FamilyError(f"{kind} needs k >= {MIN_K[kind]}, got {self.k}")
        if kind == "y_power_of" and self.base is None:
            raise FamilyError("y_power_of needs a base graph")


def theta() -> MultiGraph:
    return MultiGraph(2, ((0, 1), (0, 1), (0, 1)))


def k4() -> MultiGraph:
    return MultiGraph(4, ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)))


def k33() -> MultiGraph:
    return MultiGraph(6, tuple((a, b) for a in range(3) for b in range(3, 6)))


def moebius_ladder(k: int) -> MultiGraph:
    n = 2 * k
    cycle = [(i, (i + 1) % n) for i in range(n)]
    chords = [(i, i + k) for i in range(k)]
    return MultiGraph(n, tuple(cycle + chords))


def prism(k: int) -> MultiGraph:
    # u_i = i, w_i = k + i
    outer = [(i, (i + 1) % k) for i in range(k)]
    inner = [(k + i, k + (i + 1) % k) for i in range(k)]
    rungs = [(i, k + i) for i in range(k)]
    return MultiGraph(2 * k, tuple(outer + inner + rungs))


def crossed_prism(k: int) -> MultiGraph:
    # two 2k-cycles u_i = i, w_i = 2k + i; crossed spokes on each even square
    n = 2 * k
    outer = [(i, (i + 1) % n) for i in range(n)]
    inner = [(n + i, n + (i + 1) % n) for i in range(n)]
    spokes = []
    for i in range(0, n, 2):
        spokes.append((i, n + (i + 1) % n))
        spokes.append(((i + 1) % n, n + i))
    return MultiGraph(2 * n, tuple(outer + inner + spokes))


def y_power(base: MultiGraph, k: int) -> MultiGraph:
    """``base Y base Y ... Y base`` (k copies), folded left with the default plan."""
    g = base
    for _ in range(k - 1):
        g = y_compose(YPlan.default(g, base, 0, 0))
    return g


def generate(spec: FamilySpec) -> MultiGraph:
    kind, k = spec.kind, spec.k
    if kind == "k33":
        return k33()
    if kind == "k4":
        return k4()
    if kind == "theta":
        return theta()
    if kind == "moebius_ladder":
        return moebius_ladder(k)
    if kind == "prism":
        return prism(k)
    if kind == "crossed_prism":
        return crossed_prism(k)
    if kind == "y_power_k33":
        return y_power(k33(), k)
    return y_power(spec.base, k)


# ---------------------------------------------------------------- census


def _excess(g: MultiGraph) -> int:
    return sum(k - 1 for k in g.multiplicity.values())


def _insertions(g: MultiGraph) -> Iterator[MultiGraph]:
    """Subdivide edges e1 <= e2 with new vertices x, y and join x to y."""
    x, y = g.n, g.n + 1
    for e1 in range(g.m):
        for e2 in range(e1, g.m):
            edges = [e for i, e in enumerate(g.edges) if i != e1 and i != e2]
            a, b = g.edges[e1]
            if e1 == e2:
                edges += [(a, x), (x, y), (y, b), (x, y)]
            else:
                c, d = g.edges[e2]
                edges += [(a, x), (x, b), (c, y), (y, d), (x, y)]
            yield MultiGraph(g.n + 2, tuple(edges))


def _subdivisions(g: MultiGraph) -> Iterator[tuple[MultiGraph, int]]:
    """Each edge subdivided by a new root vertex of degree 2."""
    r = g.n
    for e, (a, b) in enumerate(g.edges):
        edges = [f for i, f in enumerate(g.edges) if i != e] + [(a, r), (r, b)]
        yield MultiGraph(g.n + 1, tuple(edges)), r


def _digon_extend(h: MultiGraph, root: int) -> tuple[MultiGraph, int]:
    """New root joined by a double edge to a new vertex that takes the old root's free slot."""
    r, w = h.n, h.n + 1
    return MultiGraph(h.n + 2, h.edges + ((r, w), (r, w), (w, root))), r


def _bridge_join(left: MultiGraph, u: int, right: MultiGraph, v: int) -> MultiGraph:
    off = left.n
    edges = left.edges + tuple((a + off, b + off) for a, b in right.edges) + ((u, v + off),)
    return MultiGraph(left.n + right.n, edges)


def _rooted_code(g: MultiGraph, root: int) -> bytes:
    return canonical_form(g, [1 if v == root else 0 for v in range(g.n)])


@lru_cache(maxsize=None)
def _levels(max_n: int, simple: bool) -> dict[int, tuple[MultiGraph, ...]]:
    """Canonical connected cubic multigraphs of order 2, 4, ..., max_n.

    Bridgeless graphs of order n come from order n - 2 by edge insertion
    (subdivide two edges, join the new vertices). Graphs with a bridge are
    a bridgeless leaf block with one edge subdivided, bridged to a rooted
    remainder: a subdivided smaller graph, or a digon hung off a smaller
    rooted remainder. When only simple graphs are wanted, anything with more
    parallel edges than later insertions could remove (two per step) is
    dropped.
    """

    def keep(h: MultiGraph) -> bool:
        return not simple or _excess(h) <= max_n - h.n

    levels: dict[int, tuple[MultiGraph, ...]] = {2: (canonical_graph(theta()),)}
    bridgeless: dict[int, list[MultiGraph]] = {2: list(levels[2])}
    rooted: dict[int, list[tuple[MultiGraph, int]]] = {1: []}
    for n in range(4, max_n + 1, 2):
        # rooted remainders of odd order n - 1
        found_r: dict[bytes, tuple[MultiGraph, int]] = {}
        cands = [sub for g in levels[n - 2] for sub in _subdivisions(g)]
        cands += [_digon_extend(h, r) for h, r in rooted[n - 3]]
        for h, r in cands:
            if _excess(h) <= (max_n - h.n - 3 if simple else max_n):
                found_r.setdefault(_rooted_code(h, r), (h, r))
        rooted[n - 1] = [found_r[c] for c in sorted(found_r)]

        found: dict[bytes, MultiGraph] = {}
        for g in levels[n - 2]:
            for h in _insertions(g):
                if keep(h):
                    found.setdefault(canonical_form(h), h)
        for a in range(2, n - 2, 2):
            for leaf in bridgeless[a]:
                for left, u in _subdivisions(leaf):
                    for right, v in rooted[n - a - 1]:
                        h = _bridge_join(left, u, right, v)
                        if keep(h):
                            found.setdefault(canonical_form(h), h)
        levels[n] = tuple(canonical_graph(found[c]) for c in sorted(found))
        bridgeless[n] = [g for g in levels[n] if not bridges(g)]
    return levels


def census(max_n: int, simple: bool = True, bipartite: bool | None = None,
           planar: bool | None = None, min_n: int = 2) -> Iterator[MultiGraph]:
    """Connected cubic graphs up to ``max_n`` vertices, one per isomorphism class.

    ``bipartite``/``planar`` are tri-state filters (None means either).
    Output is ordered by vertex count, then canonical code.
    """
    if max_n > MAX_CENSUS_N:
        raise FamilyError(f"census is limited to n <= {MAX_CENSUS_N}")
    if max_n < 2:
        return
    max_n -= max_n % 2
    for level in _levels(max_n, simple).values():
        for g in level:
            if g.n < min_n:
                continue
            if simple and not g.is_simple():
                continue
            if bipartite is not None and (is_bipartite(g) is not None) != bipartite:
                continue
            if planar is not None and is_planar(g) != planar:
                continue
            yield g


def _k_prime_3(g: MultiGraph) -> int:
    return k_prime(g, 3)


def k_primes(graphs: list[MultiGraph], jobs: int = 1) -> list[int]:
    if jobs <= 1 or len(graphs) < 2:
        return [_k_prime_3(g) for g in graphs]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_k_prime_3, graphs, chunksize=4))


def search_one_class(n: int, nonplanar: bool = True, bipartite: bool = True, simple: bool = True,
                     three_connected: bool = False, jobs: int = 1) -> list[MultiGraph]:
    """Order-``n`` census graphs with the requested properties and K'(G, 3) = 1."""
    from .graph import find_edge_cuts

    graphs = [g for g in census(n, simple=simple, bipartite=bipartite or None,
                                planar=False if nonplanar else None, min_n=n)
              if g.n == n]
    if three_connected:
        graphs = [g for g in graphs if not find_edge_cuts(g, 2, nontrivial_only=True)]
    return [g for g, k in zip(graphs, k_primes(graphs, jobs)) if k == 1]


@lru_cache(maxsize=1)
def one_class_witness() -> MultiGraph:
    """The persisted 12-vertex simple nonplanar bipartite cubic graph with K' = 1."""
    text = resources.files("edgekempe").joinpath("data/u12.g6").read_text()
    return from_graph6(text.strip())


def u_power(k: int) -> MultiGraph:
    return y_power(one_class_witness(), k)


@dataclass
class SpectrumReport:
    max_n: int
    filters: dict
    rows: list[tuple[str, int, int]] = field(default_factory=list)  # graph6/code, n, K'

    @property
    def witnesses(self) -> dict[int, str]:
        out: dict[int, str] = {}
        for code, _, k in self.rows:
            out.setdefault(k, code)
        return dict(sorted(out.items()))

    @property
    def counts(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for _, _, k in self.rows:
            out[k] = out.get(k, 0) + 1
        return dict(sorted(out.items()))

    def to_json(self) -> str:
        return json.dumps({
            "max_n": self.max_n,
            "filters": self.filters,
            "witnesses": {str(k): v for k, v in self.witnesses.items()},
            "counts": {str(k): v for k, v in self.counts.items()},
            "graphs": [{"graph": c, "n": n, "k_prime": k} for c, n, k in self.rows],
        }, indent=2)


def graph_id(g: MultiGraph) -> str:
    return to_graph6(g) if g.is_simple() else canonical_form(g).decode()


def kprime_spectrum(max_n: int, simple: bool = True, bipartite: bool | None = None,
                    planar: bool | None = None, jobs: int = 1) -> SpectrumReport:
    graphs = list(census(max_n, simple=simple, bipartite=bipartite, planar=planar, min_n=4))
    filters = {"simple": simple, "bipartite": bipartite, "planar": planar}
    report = SpectrumReport(max_n, filters)
    for g, k in zip(graphs, k_primes(graphs, jobs)):
        report.rows.append((graph_id(g), g.n, k))
    return report
