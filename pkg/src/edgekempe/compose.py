"""Y (3-edge cut) and H (2-edge cut) composition of cubic graphs and colourings."""

from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import permutations

from .classes import FIXED, KempeSpace
from .coloring import EdgeColoring, ParityError, cut_color_check
from .graph import (
    EdgeCut,
    MultiGraph,
    bridges,
    canonical_form,
    find_edge_cuts,
    is_connected,
    make_cut,
    validate_cubic,
)


class PlanError(ValueError):
    pass


@dataclass(frozen=True)
class YPlan:
    """Delete ``v1`` and ``v2``; merge edge ``x`` of g1 with edge ``y`` of g2 for each ``(x, y)``."""

    g1: MultiGraph
    g2: MultiGraph
    v1: int
    v2: int
    pairs: tuple[tuple[int, int], ...]
    # set by y_split: edge id of the split graph -> edge id of y_compose(plan)
    edge_map: tuple[int, ...] | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        for g, v in ((self.g1, self.v1), (self.g2, self.v2)):
            if not 0 <= v < g.n or g.degree(v) != 3:
                raise PlanError(f"vertex {v} is not a degree-3 vertex")
        xs = sorted(x for x, _ in self.pairs)
        ys = sorted(y for _, y in self.pairs)
        if len(self.pairs) != 3 or xs != sorted(self.g1.incidence[self.v1]) \
                or ys != sorted(self.g2.incidence[self.v2]):
            raise PlanError("correspondence must biject the edges at v1 onto the edges at v2")

    @classmethod
    def default(cls, g1: MultiGraph, g2: MultiGraph, v1: int = 0, v2: int = 0) -> "YPlan":
        return cls(g1, g2, v1, v2, tuple(zip(g1.incidence[v1], g2.incidence[v2])))

    def to_text(self) -> str:
        return "y {} {} {}".format(self.v1, self.v2, " ".join(f"{x}:{y}" for x, y in self.pairs))


@dataclass(frozen=True)
class HPlan:
    """Delete edge ``x`` of g1 and ``y`` of g2; add an edge for each ``(s1, s2)`` in ``joins``."""

    g1: MultiGraph
    g2: MultiGraph
    x: int
    y: int
    joins: tuple[tuple[int, int], tuple[int, int]]
    edge_map: tuple[int, ...] | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if not (0 <= self.x < self.g1.m and 0 <= self.y < self.g2.m):
            raise PlanError("designated edge does not exist")
        if sorted(a for a, _ in self.joins) != sorted(self.g1.edges[self.x]) \
                or sorted(b for _, b in self.joins) != sorted(self.g2.edges[self.y]):
            raise PlanError("pairing must match the endpoints of x with those of y")

    @classmethod
    def default(cls, g1: MultiGraph, g2: MultiGraph, x: int = 0, y: int = 0) -> "HPlan":
        (a1, a2), (b1, b2) = g1.edges[x], g2.edges[y]
        return cls(g1, g2, x, y, ((a1, b1), (a2, b2)))

    def to_text(self) -> str:
        return "h {} {} {}".format(self.x, self.y, " ".join(f"{a}:{b}" for a, b in self.joins))


def parse_plan(text: str, g1: MultiGraph, g2: MultiGraph) -> YPlan | HPlan:
    parts = text.split("#", 1)[0].split()
    kinds = {"y": (6, YPlan), "h": (5, HPlan)}
    if not parts or parts[0] not in kinds or len(parts) != kinds[parts[0]][0]:
        raise PlanError(f"malformed plan {text!r}")
    try:
        a, b = int(parts[1]), int(parts[2])
        links = tuple(tuple(int(t) for t in p.split(":")) for p in parts[3:])
    except ValueError as exc:
        raise PlanError(f"malformed plan {text!r}") from exc
    if any(len(link) != 2 for link in links):
        raise PlanError(f"malformed plan {text!r}")
    return kinds[parts[0]][1](g1, g2, a, b, links)


# ---------------------------------------------------------------- layouts


@dataclass(frozen=True)
class _Layout:
    graph: MultiGraph
    vmap1: dict[int, int]   # g1 vertex -> composed vertex
    vmap2: dict[int, int]
    emap1: dict[int, int]   # surviving g1 edge -> composed edge
    emap2: dict[int, int]
    new_edges: tuple[int, ...]  # composed ids of merged (Y) or added (H) edges
    cut: EdgeCut


def _y_layout(plan: YPlan) -> _Layout:
    g1, g2 = plan.g1, plan.g2
    vmap1 = {u: i for i, u in enumerate(u for u in range(g1.n) if u != plan.v1)}
    vmap2 = {u: len(vmap1) + i for i, u in enumerate(u for u in range(g2.n) if u != plan.v2)}
    edges: list[tuple[int, int]] = []
    emap1, emap2 = {}, {}
    for e, (a, b) in enumerate(g1.edges):
        if plan.v1 not in (a, b):
            emap1[e] = len(edges)
            edges.append((vmap1[a], vmap1[b]))
    for e, (a, b) in enumerate(g2.edges):
        if plan.v2 not in (a, b):
            emap2[e] = len(edges)
            edges.append((vmap2[a], vmap2[b]))
    new = []
    for x, y in plan.pairs:
        new.append(len(edges))
        edges.append((vmap1[g1.other(x, plan.v1)], vmap2[g2.other(y, plan.v2)]))
    graph = MultiGraph(g1.n + g2.n - 2, tuple(edges))
    cut = EdgeCut(tuple(new), frozenset(vmap1.values()), frozenset(vmap2.values()),
                  len(vmap1) >= 2 and len(vmap2) >= 2)
    if 0 not in cut.side_one:
        cut = EdgeCut(cut.edge_ids, cut.side_two, cut.side_one, cut.nontrivial)
    return _Layout(graph, vmap1, vmap2, emap1, emap2, tuple(new), cut)


def _h_layout(plan: HPlan) -> _Layout:
    g1, g2 = plan.g1, plan.g2
    vmap1 = {u: u for u in range(g1.n)}
    vmap2 = {u: g1.n + u for u in range(g2.n)}
    edges: list[tuple[int, int]] = []
    emap1, emap2 = {}, {}
    for e, (a, b) in enumerate(g1.edges):
        if e != plan.x:
            emap1[e] = len(edges)
            edges.append((a, b))
    for e, (a, b) in enumerate(g2.edges):
        if e != plan.y:
            emap2[e] = len(edges)
            edges.append((vmap2[a], vmap2[b]))
    new = []
    for a, b in plan.joins:
        new.append(len(edges))
        edges.append((a, vmap2[b]))
    graph = MultiGraph(g1.n + g2.n, tuple(edges))
    ends = {v for e in new for v in graph.edges[e]}
    cut = EdgeCut(tuple(new), frozenset(vmap1.values()), frozenset(vmap2.values()), len(ends) == 4)
    return _Layout(graph, vmap1, vmap2, emap1, emap2, tuple(new), cut)


def _layout(plan: YPlan | HPlan) -> _Layout:
    for g in (plan.g1, plan.g2):
        if not validate_cubic(g):
            raise PlanError("composition needs cubic graphs")
    return _y_layout(plan) if isinstance(plan, YPlan) else _h_layout(plan)


def y_compose(plan: YPlan) -> MultiGraph:
    return _layout(plan).graph


def h_compose(plan: HPlan) -> MultiGraph:
    return _layout(plan).graph


def compose(plan: YPlan | HPlan) -> MultiGraph:
    return _layout(plan).graph


def composed_cut(plan: YPlan | HPlan) -> EdgeCut:
    """The cut of the composed graph separating the two original pieces.

    It is a bond only when each piece stays connected after losing ``v_i``
    (Y) or the designated edge (H); with a bridge there, one side falls
    apart and the result is merely a disconnecting edge set.
    """
    return _layout(plan).cut


# ---------------------------------------------------------------- splitting


def _side_graph(g: MultiGraph, side: frozenset[int], cut: EdgeCut):
    verts = sorted(side)
    vmap = {u: i for i, u in enumerate(verts)}
    edges, origin = [], []
    for e, (a, b) in enumerate(g.edges):
        if a in side and b in side:
            origin.append(e)
            edges.append((vmap[a], vmap[b]))
    return verts, vmap, edges, origin


def _check_cut(g: MultiGraph, cut: EdgeCut, size: int) -> EdgeCut:
    if cut.size != size:
        raise PlanError(f"expected a {size}-edge cut, got {cut.size} edges")
    fresh = make_cut(g, cut.edge_ids)  # raises if not a cut of g
    if fresh.side_one != cut.side_one:
        raise PlanError("cut sides do not match the graph")
    return fresh


def y_split(g: MultiGraph, cut: EdgeCut) -> tuple[MultiGraph, MultiGraph, YPlan]:
    """Split over a 3-edge cut; each side gains an apex joined to its cut endpoints."""
    if not validate_cubic(g):
        raise PlanError("y_split needs a cubic graph")
    cut = _check_cut(g, cut, 3)
    pieces = []
    for side in (cut.side_one, cut.side_two):
        verts, vmap, edges, origin = _side_graph(g, side, cut)
        apex = len(verts)
        apex_edges = []
        for e in cut.edge_ids:
            a, b = g.edges[e]
            inner = a if a in side else b
            apex_edges.append(len(edges))
            edges.append((vmap[inner], apex))
        pieces.append((MultiGraph(apex + 1, tuple(edges)), origin, apex_edges))
    (g1, o1, x), (g2, o2, y) = pieces
    plan = YPlan(g1, g2, g1.n - 1, g2.n - 1, tuple(zip(x, y)))
    lay = _y_layout(plan)
    emap = [0] * g.m
    for e1, e in enumerate(o1):
        emap[e] = lay.emap1[e1]
    for e2, e in enumerate(o2):
        emap[e] = lay.emap2[e2]
    for e, new in zip(cut.edge_ids, lay.new_edges):
        emap[e] = new
    plan = YPlan(g1, g2, plan.v1, plan.v2, plan.pairs, tuple(emap))
    return g1, g2, plan


def h_split(g: MultiGraph, cut: EdgeCut) -> tuple[MultiGraph, MultiGraph, HPlan]:
    """Split over a 2-edge cut with independent edges; each side gains one edge."""
    if not validate_cubic(g):
        raise PlanError("h_split needs a cubic graph")
    cut = _check_cut(g, cut, 2)
    if not cut.nontrivial:
        raise PlanError("2-edge cut edges share a vertex")
    pieces = []
    for side in (cut.side_one, cut.side_two):
        verts, vmap, edges, origin = _side_graph(g, side, cut)
        ends = []
        for e in cut.edge_ids:
            a, b = g.edges[e]
            ends.append(vmap[a if a in side else b])
        new = len(edges)
        edges.append((ends[0], ends[1]))
        pieces.append((MultiGraph(len(verts), tuple(edges)), origin, new, ends))
    (g1, o1, x, ends1), (g2, o2, y, ends2) = pieces
    plan = HPlan(g1, g2, x, y, tuple(zip(ends1, ends2)))
    lay = _h_layout(plan)
    emap = [0] * g.m
    for e1, e in enumerate(o1):
        emap[e] = lay.emap1[e1]
    for e2, e in enumerate(o2):
        emap[e] = lay.emap2[e2]
    for e, new in zip(cut.edge_ids, lay.new_edges):
        emap[e] = new
    plan = HPlan(g1, g2, x, y, plan.joins, tuple(emap))
    return g1, g2, plan


def split(g: MultiGraph, cut: EdgeCut):
    return y_split(g, cut) if cut.size == 3 else h_split(g, cut)


# ---------------------------------------------------------------- colourings


def color_compose(plan: YPlan | HPlan, c: EdgeColoring, d: EdgeColoring) -> EdgeColoring:
    """Glue colourings of the two pieces, renaming d's colours to agree with c on the cut."""
    if c.graph != plan.g1 or d.graph != plan.g2:
        raise PlanError("colourings do not match the plan's graphs")
    lay = _layout(plan)
    rho = list(range(d.n))
    if isinstance(plan, YPlan):
        # unique rho with rho(d(y_i)) = c(x_i)
        want = {d.colors[y]: c.colors[x] for x, y in plan.pairs}
        rest = [col for col in range(d.n) if col not in want.values()]
        free = [col for col in range(d.n) if col not in want]
        rho = [want[col] if col in want else rest[free.index(col)] for col in range(d.n)]
        cut_colors = [c.colors[x] for x, _ in plan.pairs]
    else:
        a, b = d.colors[plan.y], c.colors[plan.x]
        rho[a], rho[b] = b, a
        cut_colors = [b, b]
    out = [0] * lay.graph.m
    for e, ne in lay.emap1.items():
        out[ne] = c.colors[e]
    for e, ne in lay.emap2.items():
        out[ne] = rho[d.colors[e]]
    for ne, col in zip(lay.new_edges, cut_colors):
        out[ne] = col
    return EdgeColoring(lay.graph, tuple(out), c.n)


def color_split(f: EdgeColoring, cut: EdgeCut) -> tuple[EdgeColoring, EdgeColoring]:
    """Restrict ``f`` to both pieces of ``split(f.graph, cut)``; new edges inherit cut colours."""
    cut_color_check(f, cut)
    g1, g2, plan = split(f.graph, cut)
    emap = plan.edge_map
    lay = _layout(plan)
    inv = {ne: e for e, ne in enumerate(emap)}
    outs = []
    for g, emap_side, designated in ((g1, lay.emap1, 0), (g2, lay.emap2, 1)):
        colors = [0] * g.m
        for e, ne in emap_side.items():
            colors[e] = f.colors[inv[ne]]
        if isinstance(plan, YPlan):
            for pair, ne in zip(plan.pairs, lay.new_edges):
                colors[pair[designated]] = f.colors[inv[ne]]
        else:
            colors[plan.x if designated == 0 else plan.y] = f.colors[cut.edge_ids[0]]
        outs.append(EdgeColoring(g, tuple(colors), f.n))
    return outs[0], outs[1]


# ---------------------------------------------------------------- decomposition


@dataclass
class DecompositionTree:
    graph: MultiGraph
    cut: EdgeCut | None = None
    plan: HPlan | YPlan | None = None
    children: list["DecompositionTree"] = field(default_factory=list)

    @property
    def is_leaf(self) -> bool:
        return not self.children

    def leaves(self) -> list[MultiGraph]:
        if self.is_leaf:
            return [self.graph]
        return [leaf for child in self.children for leaf in child.leaves()]

    def leaf_codes(self) -> list[str]:
        return sorted(canonical_form(g).decode() for g in self.leaves())

    def to_dict(self) -> dict:
        node = {"canonical": canonical_form(self.graph).decode(), "vertices": self.graph.n}
        if self.is_leaf:
            node["leaf"] = True
            node["three_connected"] = not find_edge_cuts(self.graph, 2, nontrivial_only=True)
        else:
            node["cut"] = list(self.cut.edge_ids)
            node["plan"] = self.plan.to_text()
            node["children"] = [child.to_dict() for child in self.children]
        return node

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def decompose_to_3connected(g: MultiGraph) -> DecompositionTree:
    """H-split on the least nontrivial 2-edge cut until no piece has one."""
    if not validate_cubic(g) or not is_connected(g):
        raise PlanError("decomposition needs a connected cubic graph")
    bad = bridges(g)
    if bad:
        raise PlanError(f"graph has bridge(s) {bad}; it has no 3-edge-colouring to decompose")
    cuts = find_edge_cuts(g, 2, nontrivial_only=True)
    if not cuts:
        return DecompositionTree(g)
    g1, g2, plan = h_split(g, cuts[0])
    return DecompositionTree(g, cuts[0], plan, [decompose_to_3connected(g1), decompose_to_3connected(g2)])


def full_decomposition_leaves(g: MultiGraph) -> list[MultiGraph]:
    """Pieces left after splitting over every nontrivial 2- then 3-edge cut."""
    cuts = find_edge_cuts(g, 2, nontrivial_only=True) or find_edge_cuts(g, 3, nontrivial_only=True)
    if not cuts:
        return [g]
    g1, g2, _ = split(g, cuts[0])
    return full_decomposition_leaves(g1) + full_decomposition_leaves(g2)


# ---------------------------------------------------------------- multiplicativity


@dataclass
class MultiplicativityReport:
    a: int
    b: int
    k: int
    product_ok: bool
    bijection_ok: bool
    counterexample: dict | None = None

    @property
    def passed(self) -> bool:
        return self.product_ok and self.bijection_ok


def verify_multiplicativity(g1: MultiGraph, g2: MultiGraph, plan: YPlan | HPlan,
                            jobs: int = 1) -> MultiplicativityReport:
    """Check K'(composite) = K'(g1) K'(g2) and that glued representatives hit each class once."""
    composite = compose(plan)
    graphs = (g1, g2, composite)
    with ThreadPoolExecutor(max_workers=max(1, jobs)) as pool:
        s1, s2, s = pool.map(lambda h: KempeSpace.build(h, 3, FIXED), graphs)
    r1, r2 = s1.report(), s2.report()
    a, b, k = r1.class_count, r2.class_count, s.class_count
    hits = []
    for c in r1.representatives:
        for d in r2.representatives:
            hits.append(s.class_of(color_compose(plan, c, d)))
    bijection_ok = sorted(hits) == list(range(k)) and len(hits) == k
    report = MultiplicativityReport(a, b, k, a * b == k, bijection_ok)
    if not report.passed:
        report.counterexample = {
            "g1": canonical_form(g1).decode(),
            "g2": canonical_form(g2).decode(),
            "plan": plan.to_text(),
            "a": a, "b": b, "k": k,
            "class_hits": hits,
            "representatives_g1": [list(c.colors) for c in r1.representatives],
            "representatives_g2": [list(d.colors) for d in r2.representatives],
        }
    return report


def all_y_plans(g1: MultiGraph, g2: MultiGraph, v1: int, v2: int) -> list[YPlan]:
    xs = g1.incidence[v1]
    return [YPlan(g1, g2, v1, v2, tuple(zip(xs, ys))) for ys in permutations(g2.incidence[v2])]


__all__ = [
    "DecompositionTree",
    "HPlan",
    "MultiplicativityReport",
    "ParityError",
    "PlanError",
    "YPlan",
    "color_compose",
    "color_split",
    "compose",
    "composed_cut",
    "decompose_to_3connected",
    "h_compose",
    "h_split",
    "parse_plan",
    "verify_multiplicativity",
    "y_compose",
    "y_split",
]
