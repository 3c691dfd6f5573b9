"""Proper edge colourings, Kempe chains and single switches."""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence

from .graph import EdgeCut, MultiGraph, validate_cubic


class ColoringError(ValueError):
    """Improper, incomplete or mismatched colouring data."""


class ParityError(AssertionError):
    """A proper 3-edge-colouring gave a 2-cut two colours or a 3-cut a repeat (always a bug)."""


@dataclass(frozen=True)
class EdgeColoring:
    graph: MultiGraph
    colors: tuple[int, ...]
    n: int = 3

    def __post_init__(self) -> None:
        colors = tuple(int(c) for c in self.colors)
        object.__setattr__(self, "colors", colors)
        if len(colors) != self.graph.m:
            raise ColoringError(f"{len(colors)} colours given for {self.graph.m} edges")
        if any(not 0 <= c < self.n for c in colors):
            raise ColoringError(f"colour outside palette 0..{self.n - 1}")
        for v, inc in enumerate(self.graph.incidence):
            seen = [colors[e] for e in inc]
            if len(set(seen)) != len(seen):
                raise ColoringError(f"improper at vertex {v}: colours {seen}")

    def __getitem__(self, e: int) -> int:
        return self.colors[e]

    def permuted(self, perm: Sequence[int]) -> "EdgeColoring":
        return EdgeColoring(self.graph, tuple(perm[c] for c in self.colors), self.n)

    def to_text(self) -> str:
        return " ".join(map(str, self.colors))

    def to_json(self) -> str:
        return json.dumps({"n": self.n, "colors": list(self.colors)})


def parse_coloring(g: MultiGraph, text: str, n: int = 3) -> EdgeColoring:
    text = text.strip()
    if text.startswith("{"):
        data = json.loads(text)
        return EdgeColoring(g, tuple(data["colors"]), int(data["n"]))
    try:
        colors = tuple(int(x) for x in text.replace(",", " ").split())
    except ValueError as exc:
        raise ColoringError(f"bad colour list {text!r}") from exc
    return EdgeColoring(g, colors, n)


@dataclass(frozen=True)
class KempeChain:
    pair: tuple[int, int]
    edge_ids: tuple[int, ...]

    @property
    def key(self) -> tuple[tuple[int, int], int]:
        return self.pair, min(self.edge_ids)

    def vertices(self, g: MultiGraph) -> frozenset[int]:
        return frozenset(v for e in self.edge_ids for v in g.edges[e])

    def __len__(self) -> int:
        return len(self.edge_ids)


@dataclass(frozen=True)
class Switch:
    pair: tuple[int, int]
    seed: int

    def __post_init__(self) -> None:
        p, q = self.pair
        if p == q:
            raise ValueError("a switch needs two distinct colours")
        object.__setattr__(self, "pair", (min(p, q), max(p, q)))


def _pair(pair: Iterable[int]) -> tuple[int, int]:
    p, q = pair
    if p == q:
        raise ValueError("colour pair must have two distinct colours")
    return (min(p, q), max(p, q))


# ---------------------------------------------------------------- enumeration


def _search_order(g: MultiGraph, start: int = 0) -> list[int]:
    """Edges ordered so each one touches as many earlier edges as possible."""
    order: list[int] = []
    placed = [False] * g.m
    touched = [0] * g.n
    for _ in range(g.m):
        best, best_key = -1, None
        for e in range(g.m):
            if placed[e]:
                continue
            a, b = g.edges[e]
            key = (touched[a] + touched[b], -e)
            if best_key is None or key > best_key:
                best, best_key = e, key
        placed[best] = True
        order.append(best)
        a, b = g.edges[best]
        touched[a] += 1
        touched[b] += 1
    return order


def iter_colorings(g: MultiGraph, n: int = 3, fix_vertex: int | None = None):
    """Yield raw colour tuples of every proper ``n``-edge-colouring (unordered)."""
    m = g.m
    colors = [-1] * m
    used = [0] * g.n
    if fix_vertex is not None:
        inc = g.incidence[fix_vertex]
        if len(inc) > n:
            return
        for c, e in enumerate(inc):
            a, b = g.edges[e]
            if used[a] >> c & 1 or used[b] >> c & 1:
                return
            colors[e] = c
            used[a] |= 1 << c
            used[b] |= 1 << c
    order = [e for e in _search_order(g) if colors[e] < 0]
    ends = g.edges
    full = (1 << n) - 1

    def rec(i: int):
        if i == len(order):
            yield tuple(colors)
            return
        e = order[i]
        a, b = ends[e]
        free = full & ~(used[a] | used[b])
        c = 0
        while free:
            if free & 1:
                bit = 1 << c
                colors[e] = c
                used[a] |= bit
                used[b] |= bit
                yield from rec(i + 1)
                used[a] ^= bit
                used[b] ^= bit
            free >>= 1
            c += 1
        colors[e] = -1

    yield from rec(0)


def enumerate_colorings(g: MultiGraph, n: int = 3, fix_vertex: int | None = None) -> list[EdgeColoring]:
    """All proper colourings in lexicographic order of colour vectors.

    With ``fix_vertex`` the edges at that vertex are pinned to ``0, 1, 2, ...``
    in edge-id order.
    """
    return [EdgeColoring(g, c, n) for c in sorted(iter_colorings(g, n, fix_vertex))]


# ---------------------------------------------------------------- chains


def _color_table(g: MultiGraph, colors: Sequence[int], n: int) -> list[list[int]]:
    at = [[-1] * n for _ in range(g.n)]
    for e, (a, b) in enumerate(g.edges):
        c = colors[e]
        at[a][c] = e
        at[b][c] = e
    return at


def _walk(g: MultiGraph, colors: Sequence[int], at: list[list[int]], pair: tuple[int, int],
          seed: int) -> tuple[list[int], bool]:
    """Edges of the chain through ``seed`` and whether the chain closes up."""
    p, q = pair
    a, b = g.edges[seed]
    lo, hi = min(a, b), max(a, b)
    out = [seed]

    def extend(e: int, v: int) -> bool:
        # walk away from e through v; True if we came back to seed
        while True:
            c = colors[e]
            f = at[v][q if c == p else p]
            if f < 0:
                return False
            if f == seed:
                return True
            out.append(f)
            e, v = f, g.other(f, v)

    closed = extend(seed, lo)
    if not closed:
        # open path: seed, then the low side, then the high side
        extend(seed, hi)
    return out, closed


def _check_cubic_chain(g: MultiGraph, n: int, edges: list[int], closed: bool) -> None:
    if n == 3 and validate_cubic(g) and (not closed or len(edges) % 2):
        raise AssertionError(f"Kempe chain {edges} in a 3-coloured cubic graph is not an even cycle")


def kempe_chain(c: EdgeColoring, pair: Iterable[int], seed_edge: int) -> KempeChain:
    pair = _pair(pair)
    if c.colors[seed_edge] not in pair:
        raise ColoringError(f"seed edge {seed_edge} has colour {c.colors[seed_edge]}, not in {pair}")
    at = _color_table(c.graph, c.colors, c.n)
    edges, closed = _walk(c.graph, c.colors, at, pair, seed_edge)
    _check_cubic_chain(c.graph, c.n, edges, closed)
    return KempeChain(pair, tuple(edges))


def chain_edge_sets(g: MultiGraph, colors: Sequence[int], n: int, pair: tuple[int, int]) -> list[list[int]]:
    """Edge-id lists of all chains for ``pair``, ordered by smallest edge id."""
    at = _color_table(g, colors, n)
    p, q = pair
    seen = [False] * g.m
    chains = []
    for e in range(g.m):
        if seen[e] or colors[e] not in (p, q):
            continue
        edges, closed = _walk(g, colors, at, pair, e)
        for f in edges:
            seen[f] = True
        chains.append(edges)
    return chains


def all_chains(c: EdgeColoring, pair: Iterable[int]) -> list[KempeChain]:
    pair = _pair(pair)
    at = _color_table(c.graph, c.colors, c.n)
    seen = [False] * c.graph.m
    chains = []
    for e in range(c.graph.m):
        if seen[e] or c.colors[e] not in pair:
            continue
        edges, closed = _walk(c.graph, c.colors, at, pair, e)
        _check_cubic_chain(c.graph, c.n, edges, closed)
        for f in edges:
            seen[f] = True
        chains.append(KempeChain(pair, tuple(edges)))
    return chains


def switch_colors(colors: Sequence[int], pair: tuple[int, int], chain_edges: Iterable[int]) -> tuple[int, ...]:
    p, q = pair
    out = list(colors)
    for e in chain_edges:
        out[e] = q if out[e] == p else p
    return tuple(out)


def apply_switch(c: EdgeColoring, s: Switch) -> EdgeColoring:
    """Exchange the switch's two colours along its chain; ``c`` is left untouched."""
    if not 0 <= s.seed < c.graph.m or c.colors[s.seed] not in s.pair:
        raise ColoringError(f"stale switch {s}: seed colour not in pair")
    chain = kempe_chain(c, s.pair, s.seed)
    return EdgeColoring(c.graph, switch_colors(c.colors, s.pair, chain.edge_ids), c.n)


# ---------------------------------------------------------------- parity


def cut_color_check(c: EdgeColoring, cut: EdgeCut) -> Counter:
    """Colour multiset on the cut; raises ParityError if cut parity fails."""
    found = Counter(c.colors[e] for e in cut.edge_ids)
    if c.n == 3 and validate_cubic(c.graph):
        if cut.size == 2 and len(found) != 1:
            raise ParityError(f"2-edge cut {cut.edge_ids} carries colours {sorted(found.elements())}")
        if cut.size == 3 and len(found) != 3:
            raise ParityError(f"3-edge cut {cut.edge_ids} carries colours {sorted(found.elements())}")
    return found
