"""Edge-Kempe equivalence classes and switch-sequence algebra."""

from __future__ import annotations

import itertools
import json
from collections import deque
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .coloring import (
    ColoringError,
    EdgeColoring,
    Switch,
    all_chains,
    apply_switch,
    chain_edge_sets,
    iter_colorings,
    kempe_chain,
    switch_colors,
)
from .graph import MultiGraph, canonical_form

MAX_STATES = 10**6
FIXED = "fixed-vertex"
RAW = "raw"


class StateSpaceTooLarge(RuntimeError):
    pass


@dataclass(frozen=True)
class SwitchSequence:
    start: EdgeColoring
    steps: tuple[Switch, ...] = ()

    def replay(self) -> Iterator[EdgeColoring]:
        """The start colouring, then the colouring after each step."""
        c = self.start
        yield c
        for s in self.steps:
            c = apply_switch(c, s)
            yield c

    @property
    def end(self) -> EdgeColoring:
        for c in self.replay():
            pass
        return c

    def touched_edges(self) -> list[tuple[int, ...]]:
        """Chain edge sets of every step, in order."""
        out = []
        c = self.start
        for s in self.steps:
            out.append(kempe_chain(c, s.pair, s.seed).edge_ids)
            c = apply_switch(c, s)
        return out

    def __len__(self) -> int:
        return len(self.steps)


@dataclass
class ClassReport:
    class_count: int
    representatives: list[EdgeColoring]
    class_sizes: list[int]
    method: str
    graph: MultiGraph | None = None
    n: int = 3

    def to_json(self) -> str:
        code = canonical_form(self.graph).decode() if self.graph is not None else None
        return json.dumps({
            "graph": code,
            "n": self.n,
            "k_prime": self.class_count,
            "method": self.method,
            "class_sizes": self.class_sizes,
            "representatives": [list(r.colors) for r in self.representatives],
        })


def _normal(colors: Sequence[int], n: int) -> tuple[int, ...]:
    """Relabel colours by first appearance: the least vector under global permutation."""
    perm: dict[int, int] = {}
    for c in colors:
        if c not in perm:
            perm[c] = len(perm)
    return tuple(perm[c] for c in colors)


def _pin_perm(g: MultiGraph, colors: Sequence[int], n: int, v: int) -> list[int]:
    at_v = [colors[e] for e in g.incidence[v]]
    rest = [c for c in range(n) if c not in at_v]
    perm = [0] * n
    for new, old in enumerate(at_v + rest):
        perm[old] = new
    return perm


def _moves(g: MultiGraph, colors: tuple[int, ...], n: int, avoid: int | None):
    """(switch, resulting colours) for every single switch of ``colors``."""
    blocked = set(g.incidence[avoid]) if avoid is not None else ()
    for pair in itertools.combinations(range(n), 2):
        for chain in chain_edge_sets(g, colors, n, pair):
            if blocked and any(e in blocked for e in chain):
                continue
            yield Switch(pair, min(chain)), switch_colors(colors, pair, chain)


@dataclass
class KempeSpace:
    """Colouring state space with component labels.

    ``fixed-vertex`` keeps only colourings pinned at ``vertex`` and links them
    by switches whose chains avoid it; ``raw`` keeps everything.
    """

    graph: MultiGraph
    n: int = 3
    method: str = FIXED
    vertex: int = 0
    states: list[tuple[int, ...]] = field(default_factory=list)
    label: dict[tuple[int, ...], int] = field(default_factory=dict)
    edges: list[tuple[int, int]] = field(default_factory=list)

    @classmethod
    def build(cls, g: MultiGraph, n: int = 3, method: str = FIXED, vertex: int = 0,
              with_edges: bool = False, limit: int = MAX_STATES) -> "KempeSpace":
        if method not in (FIXED, RAW):
            raise ValueError(f"unknown method {method!r}")
        if g.n == 0:
            raise ValueError("empty graph")
        fix = vertex if method == FIXED else None
        states = []
        for c in iter_colorings(g, n, fix):
            states.append(c)
            if len(states) > limit:
                raise StateSpaceTooLarge(f"more than {limit} colourings")
        states.sort()
        space = cls(g, n, method, vertex, states)
        index = {s: i for i, s in enumerate(states)}
        comp = [-1] * len(states)
        avoid = vertex if method == FIXED else None
        k = 0
        for root in range(len(states)):
            if comp[root] >= 0:
                continue
            comp[root] = k
            queue = deque([root])
            while queue:
                i = queue.popleft()
                for _, nxt in _moves(g, states[i], n, avoid):
                    j = index[nxt]
                    if with_edges and i < j:
                        space.edges.append((i, j))
                    if comp[j] < 0:
                        comp[j] = k
                        queue.append(j)
            k += 1
        space.label = {s: comp[i] for i, s in enumerate(states)}
        return space

    @property
    def class_count(self) -> int:
        return len(set(self.label.values()))

    def class_of(self, c: EdgeColoring | Sequence[int]) -> int:
        colors = tuple(c.colors) if isinstance(c, EdgeColoring) else tuple(c)
        if self.method == FIXED:
            perm = _pin_perm(self.graph, colors, self.n, self.vertex)
            colors = tuple(perm[x] for x in colors)
        return self.label[colors]

    def report(self) -> ClassReport:
        members: dict[int, list[tuple[int, ...]]] = {}
        for s, lab in self.label.items():
            members.setdefault(lab, []).append(s)
        rows = sorted((min(_normal(s, self.n) for s in ms), len(ms)) for ms in members.values())
        return ClassReport(
            class_count=len(rows),
            representatives=[EdgeColoring(self.graph, r, self.n) for r, _ in rows],
            class_sizes=[size for _, size in rows],
            method=self.method,
            graph=self.graph,
            n=self.n,
        )


def count_classes(g: MultiGraph, n: int = 3, method: str = FIXED) -> ClassReport:
    """K'(g, n) with one lexicographically least representative per class."""
    return KempeSpace.build(g, n, method).report()


def k_prime(g: MultiGraph, n: int = 3, method: str = FIXED) -> int:
    return KempeSpace.build(g, n, method).class_count


def are_equivalent(c: EdgeColoring, d: EdgeColoring) -> SwitchSequence | None:
    """Shortest switch sequence from ``c`` to ``d``, or None if inequivalent."""
    if c.graph != d.graph or c.n != d.n:
        raise ValueError("colourings of different graphs or palettes")
    g, n = c.graph, c.n
    start, goal = c.colors, d.colors
    parent: dict[tuple[int, ...], tuple[tuple[int, ...], Switch] | None] = {start: None}
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        if cur == goal:
            steps = []
            while parent[cur] is not None:
                cur, s = parent[cur]
                steps.append(s)
            return SwitchSequence(c, tuple(reversed(steps)))
        for s, nxt in _moves(g, cur, n, None):
            if nxt not in parent:
                parent[nxt] = (cur, s)
                queue.append(nxt)
    return None


def permute_colors_via_switches(c: EdgeColoring, perm: Sequence[int]) -> SwitchSequence:
    """Switches that turn ``c`` into ``perm`` applied to every edge colour.

    ``perm[i]`` is the new name of colour ``i``. Each transposition is
    realised by switching every chain of that colour pair.
    """
    n = c.n
    if sorted(perm) != list(range(n)):
        raise ValueError(f"{perm} is not a permutation of 0..{n - 1}")
    cur = list(range(n))  # original colour -> colour it currently carries
    steps: list[Switch] = []
    colors = c.colors
    for i in range(n):
        if cur[i] == perm[i]:
            continue
        j = cur.index(perm[i])
        pair = (min(cur[i], cur[j]), max(cur[i], cur[j]))
        for chain in chain_edge_sets(c.graph, colors, n, pair):
            steps.append(Switch(pair, min(chain)))
            colors = switch_colors(colors, pair, chain)
        cur[i], cur[j] = cur[j], cur[i]
    return SwitchSequence(c, tuple(steps))


def normalize_switch_sequence(seq: SwitchSequence, v: int) -> SwitchSequence:
    """Rewrite ``seq`` so that no switch changes a colour at vertex ``v``.

    A step whose chain misses ``v`` is kept on the same chain with its colour
    pair renamed by the running permutation ``sigma``. A step whose chain
    passes through ``v`` is replaced by switching every other chain of that
    pair, and ``sigma`` absorbs the transposition. Any permutation left over
    at the end (only possible with more than deg(v) + 1 colours) is undone
    with global switches on colours absent at ``v``.
    """
    c = seq.start
    g, n = c.graph, c.n
    d = seq.end
    at_v = g.incidence[v]
    if any(c.colors[e] != d.colors[e] for e in at_v):
        raise ValueError(f"start and end colourings differ on the edges at vertex {v}")
    blocked = set(at_v)
    sigma = list(range(n))
    orig = c.colors  # o_i
    hat = c.colors   # running rewritten colouring
    out: list[Switch] = []
    for s in seq.steps:
        p1, p2 = s.pair
        chain = kempe_chain(EdgeColoring(g, orig, n), s.pair, s.seed).edge_ids
        renamed = (sigma[p1], sigma[p2])
        if not blocked.intersection(chain):
            out.append(Switch(renamed, s.seed))
            hat = switch_colors(hat, renamed, chain)
        else:
            for other in chain_edge_sets(g, orig, n, s.pair):
                if s.seed in other:
                    continue
                out.append(Switch(renamed, min(other)))
                hat = switch_colors(hat, renamed, other)
            sigma[p1], sigma[p2] = sigma[p2], sigma[p1]
        orig = switch_colors(orig, s.pair, chain)
    result = SwitchSequence(c, tuple(out))
    if hat != d.colors:
        # hat == sigma . d; undo sigma on the colours missing at v
        inverse = [0] * n
        for x, y in enumerate(sigma):
            inverse[y] = x
        fix = permute_colors_via_switches(EdgeColoring(g, hat, n), inverse)
        result = SwitchSequence(c, result.steps + fix.steps)
    return result


def export_kempe_graph(g: MultiGraph, n: int = 3, limit: int = MAX_STATES) -> str:
    """DOT text of the pinned colouring space with one edge per single switch."""
    space = KempeSpace.build(g, n, FIXED, with_edges=True, limit=limit)
    lines = ["graph kempe {"]
    for i, s in enumerate(space.states):
        lines.append(f'  c{i} [label="{"".join(map(str, s))}", class={space.label[s]}];')
    for i, j in sorted(set(space.edges)):
        lines.append(f"  c{i} -- c{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


__all__ = [
    "ClassReport",
    "ColoringError",
    "KempeSpace",
    "StateSpaceTooLarge",
    "SwitchSequence",
    "all_chains",
    "are_equivalent",
    "count_classes",
    "export_kempe_graph",
    "k_prime",
    "normalize_switch_sequence",
    "permute_colors_via_switches",
]
