"""Loopless multigraphs with stable edge ids.

Vertices are ``0..n-1``; edge ``i`` is ``edges[i]``. Parallel edges are
allowed, loops are not. Graph values are immutable; derived tables
(incidence lists, adjacency multiplicities) are cached on first use.
"""

from __future__ import annotations

import itertools
from collections import Counter, deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import networkx as nx


class GraphFormatError(ValueError):
    """Raised for malformed graph text or invalid edge data."""


@dataclass(frozen=True)
class MultiGraph:
    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if self.n < 0:
            raise GraphFormatError(f"negative vertex count {self.n}")
        edges = tuple((int(a), int(b)) for a, b in self.edges)
        for i, (a, b) in enumerate(edges):
            if not (0 <= a < self.n and 0 <= b < self.n):
                raise GraphFormatError(f"edge {i} = ({a}, {b}) out of range for {self.n} vertices")
            if a == b:
                raise GraphFormatError(f"edge {i} is a loop at vertex {a}")
        object.__setattr__(self, "edges", edges)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "MultiGraph":
        return cls(n, tuple((a, b) for a, b in edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def incidence(self) -> tuple[tuple[int, ...], ...]:
        """Edge ids at each vertex, in increasing id order."""
        inc: list[list[int]] = [[] for _ in range(self.n)]
        for i, (a, b) in enumerate(self.edges):
            inc[a].append(i)
            inc[b].append(i)
        return tuple(tuple(x) for x in inc)

    @cached_property
    def neighbors(self) -> tuple[tuple[int, ...], ...]:
        """Neighbour of each vertex along each incident edge (with repeats)."""
        return tuple(tuple(self.other(e, v) for e in self.incidence[v]) for v in range(self.n))

    @cached_property
    def multiplicity(self) -> dict[tuple[int, int], int]:
        return dict(Counter((min(a, b), max(a, b)) for a, b in self.edges))

    def degree(self, v: int) -> int:
        return len(self.incidence[v])

    def other(self, e: int, v: int) -> int:
        a, b = self.edges[e]
        if v == a:
            return b
        if v == b:
            return a
        raise ValueError(f"vertex {v} is not an endpoint of edge {e}")

    def is_simple(self) -> bool:
        return all(k == 1 for k in self.multiplicity.values())

    def relabel(self, perm: Sequence[int], edge_order: Sequence[int] | None = None) -> "MultiGraph":
        """Vertex ``v`` becomes ``perm[v]``; edges are listed in ``edge_order`` (default: unchanged)."""
        order = range(self.m) if edge_order is None else edge_order
        return MultiGraph(self.n, tuple((perm[self.edges[e][0]], perm[self.edges[e][1]]) for e in order))

    def to_networkx(self) -> nx.MultiGraph:
        g = nx.MultiGraph()
        g.add_nodes_from(range(self.n))
        for i, (a, b) in enumerate(self.edges):
            g.add_edge(a, b, key=i)
        return g

    def __str__(self) -> str:
        return format_graph(self)


@dataclass(frozen=True)
class EdgeCut:
    edge_ids: tuple[int, ...]
    side_one: frozenset[int]
    side_two: frozenset[int]
    nontrivial: bool

    @property
    def size(self) -> int:
        return len(self.edge_ids)


# ---------------------------------------------------------------- text I/O


def parse_graph(text: str) -> MultiGraph:
    """Parse the ``vertices``/``edge`` text format, or a graph6 string."""
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise GraphFormatError("empty graph description")
    if not lines[0].startswith("vertices"):
        if len(lines) != 1:
            raise GraphFormatError("expected `vertices <n>` header or a single graph6 line")
        return from_graph6(lines[0])
    n = None
    edges = []
    for ln in lines:
        parts = ln.split()
        try:
            if parts[0] == "vertices" and len(parts) == 2 and n is None:
                n = int(parts[1])
            elif parts[0] == "edge" and len(parts) == 3 and n is not None:
                edges.append((int(parts[1]), int(parts[2])))
            else:
                raise GraphFormatError(f"unrecognised line: {ln!r}")
        except ValueError as exc:
            if isinstance(exc, GraphFormatError):
                raise
            raise GraphFormatError(f"bad integer in line: {ln!r}") from exc
    return MultiGraph(n, tuple(edges))


def format_graph(g: MultiGraph) -> str:
    out = [f"vertices {g.n}"]
    out.extend(f"edge {a} {b}" for a, b in g.edges)
    return "\n".join(out) + "\n"


def from_graph6(s: str) -> MultiGraph:
    """Decode a graph6 string; edge ids follow graph6 column order."""
    s = s.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    try:
        h = nx.from_graph6_bytes(s.encode("ascii"))
    except (nx.NetworkXError, ValueError, UnicodeEncodeError) as exc:
        raise GraphFormatError(f"invalid graph6 string {s!r}: {exc}") from exc
    # column order: (i, j) with i < j, sorted by j then i
    edges = sorted((min(a, b), max(a, b)) for a, b in h.edges())
    edges.sort(key=lambda e: (e[1], e[0]))
    return MultiGraph(h.number_of_nodes(), tuple(edges))


def to_graph6(g: MultiGraph) -> str:
    if not g.is_simple():
        raise GraphFormatError("graph6 cannot encode parallel edges")
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return nx.to_graph6_bytes(h, header=False).decode("ascii").strip()


# ---------------------------------------------------------------- predicates


def validate_cubic(g: MultiGraph) -> bool:
    return all(len(inc) == 3 for inc in g.incidence)


def components(g: MultiGraph, removed: Iterable[int] = ()) -> list[list[int]]:
    """Connected components (sorted vertex lists) of ``g`` minus the ``removed`` edges."""
    skip = set(removed)
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        stack = [s]
        while stack:
            u = stack.pop()
            for e in g.incidence[u]:
                if e in skip:
                    continue
                w = g.other(e, u)
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def is_connected(g: MultiGraph) -> bool:
    return g.n <= 1 or len(components(g)) == 1


def is_bipartite(g: MultiGraph) -> tuple[frozenset[int], frozenset[int]] | None:
    """A bipartition with vertex 0's side first, or None.

    Disconnected graphs are 2-coloured per component, each component's
    lowest vertex on the first side.
    """
    side = [-1] * g.n
    for s in range(g.n):
        if side[s] >= 0:
            continue
        side[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.neighbors[u]:
                if side[w] < 0:
                    side[w] = 1 - side[u]
                    queue.append(w)
                elif side[w] == side[u]:
                    return None
    return (frozenset(v for v in range(g.n) if side[v] == 0),
            frozenset(v for v in range(g.n) if side[v] == 1))


def is_planar(g: MultiGraph) -> bool:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    planar, _ = nx.check_planarity(h)
    return planar


def bridges(g: MultiGraph) -> list[int]:
    return [e for e in range(g.m) if len(components(g, (e,))) > len(components(g))]


# ---------------------------------------------------------------- edge cuts


def _cut_sides(g: MultiGraph, subset: tuple[int, ...]) -> tuple[frozenset[int], frozenset[int]] | None:
    comps = components(g, subset)
    if len(comps) != 2:
        return None
    one, two = (frozenset(c) for c in comps)
    if 0 in two:
        one, two = two, one
    # every cut edge must cross; otherwise a smaller cut is hiding inside
    for e in subset:
        a, b = g.edges[e]
        if (a in one) == (b in one):
            return None
    return one, two


def _nontrivial(g: MultiGraph, subset: tuple[int, ...], one: frozenset[int], two: frozenset[int]) -> bool:
    if len(subset) == 3:
        return len(one) >= 2 and len(two) >= 2
    ends = [v for e in subset for v in g.edges[e]]
    return len(set(ends)) == 4


def find_edge_cuts(g: MultiGraph, size: int, nontrivial_only: bool = False) -> list[EdgeCut]:
    """All bonds of ``size`` edges, lexicographic by sorted edge ids."""
    if size not in (2, 3):
        raise ValueError("cut size must be 2 or 3")
    if not is_connected(g):
        raise ValueError("edge cuts are only defined here for connected graphs")
    cuts = []
    for subset in itertools.combinations(range(g.m), size):
        sides = _cut_sides(g, subset)
        if sides is None:
            continue
        flag = _nontrivial(g, subset, *sides)
        if nontrivial_only and not flag:
            continue
        cuts.append(EdgeCut(subset, sides[0], sides[1], flag))
    return cuts


def make_cut(g: MultiGraph, edge_ids: Iterable[int]) -> EdgeCut:
    """Package a user-given edge set as an EdgeCut, or raise ValueError."""
    subset = tuple(sorted(set(edge_ids)))
    if len(subset) not in (2, 3) or any(not 0 <= e < g.m for e in subset):
        raise ValueError(f"invalid cut edge set {subset}")
    sides = _cut_sides(g, subset)
    if sides is None:
        raise ValueError(f"edges {subset} do not form a 2-sided edge cut")
    return EdgeCut(subset, sides[0], sides[1], _nontrivial(g, subset, *sides))


# ---------------------------------------------------------------- canonical form


def _refine(g: MultiGraph, colors: list[int]) -> tuple[list[int], tuple]:
    """Colour refinement to a stable partition.

    Returns colours as ranks ``0..k-1`` and a trace (cell signatures in
    colour order) that depends only on the isomorphism type of the
    coloured graph.
    """
    nbrs = g.neighbors
    k = len(set(colors))
    while True:
        sigs = [(colors[v], tuple(sorted([colors[w] for w in nbrs[v]]))) for v in range(g.n)]
        ordered = sorted(set(sigs))
        rank = {s: i for i, s in enumerate(ordered)}
        new = [rank[s] for s in sigs]
        if len(ordered) == k:
            counts = Counter(new)
            trace = tuple((counts[i], sig[1]) for i, sig in enumerate(ordered))
            return new, trace
        colors, k = new, len(ordered)


def _vertex_invariant(g: MultiGraph, v: int) -> tuple:
    """Cheap isomorphism-invariant: edge multiplicities, triangles, BFS layer sizes."""
    mult = tuple(sorted(Counter(g.neighbors[v]).values()))
    nb = set(g.neighbors[v])
    tri = sum(1 for a in nb for b in g.neighbors[a] if b in nb)
    layers = []
    seen = {v}
    frontier = [v]
    while frontier:
        nxt = []
        for u in frontier:
            for w in g.neighbors[u]:
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        if nxt:
            layers.append(len(nxt))
        frontier = nxt
    return mult, tri, tuple(layers)


def _code(g: MultiGraph, perm: Sequence[int]) -> tuple[tuple[int, int], ...]:
    return tuple(sorted((min(perm[a], perm[b]), max(perm[a], perm[b])) for a, b in g.edges))


def canonical_labeling(g: MultiGraph, colors: Sequence[int] | None = None) -> list[int]:
    """A vertex permutation ``perm`` such that relabelling by it yields the canonical graph.

    Individualisation-refinement; branches whose refinement traces are
    already worse than the best leaf's are cut. ``colors`` optionally
    fixes an initial vertex partition (e.g. a distinguished root).
    """
    if g.n == 0:
        return []
    best: dict = {"key": None, "perm": None}

    def search(cols: list[int], path: list) -> None:
        cols, trace = _refine(g, cols)
        path = path + [trace]
        if best["key"] is not None:
            prefix = best["key"][0][:len(path)]
            if path > prefix:
                return
        k = max(cols) + 1
        if k == g.n:
            key = (path, _code(g, cols))
            if best["key"] is None or key < best["key"]:
                best["key"], best["perm"] = key, cols
            return
        counts = Counter(cols)
        target = min((c for c in counts if counts[c] > 1), key=lambda c: (counts[c], c))
        for v in range(g.n):
            if cols[v] != target:
                continue
            # v keeps the cell's slot, the rest of the cell moves just above it
            nxt = [2 * c + (1 if (c == target and w != v) else 0) for w, c in enumerate(cols)]
            search(nxt, path)

    base = [0] * g.n if colors is None else list(colors)
    start = [(base[v], _vertex_invariant(g, v)) for v in range(g.n)]
    rank = {x: i for i, x in enumerate(sorted(set(start)))}
    search([rank[x] for x in start], [tuple(sorted(rank.items()))])
    return best["perm"]


def canonical_graph(g: MultiGraph) -> MultiGraph:
    perm = canonical_labeling(g)
    relabeled = g.relabel(perm)
    order = sorted(range(g.m), key=lambda e: (min(relabeled.edges[e]), max(relabeled.edges[e])))
    return MultiGraph(g.n, tuple((min(relabeled.edges[e]), max(relabeled.edges[e])) for e in order))


def canonical_form(g: MultiGraph, colors: Sequence[int] | None = None) -> bytes:
    """Byte code equal for two multigraphs exactly when they are isomorphic.

    With ``colors``, isomorphisms must also preserve the vertex colouring
    (colours are compared as given, so use small integers).
    """
    perm = canonical_labeling(g, colors)
    body = ",".join(f"{a}-{b}" for a, b in _code(g, perm))
    if colors is None:
        return f"{g.n}:{body}".encode("ascii")
    inv = [0] * g.n
    for v, p in enumerate(perm):
        inv[p] = v
    tags = "".join(f"{colors[inv[i]]}." for i in range(g.n))
    return f"{g.n}:{body}|{tags}".encode("ascii")


def is_isomorphic(g: MultiGraph, h: MultiGraph) -> bool:
    return g.n == h.n and g.m == h.m and canonical_form(g) == canonical_form(h)
