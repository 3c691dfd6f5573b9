"""Property suites shared by ``edgekempe verify`` and the acceptance tests."""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .classes import FIXED, RAW, SwitchSequence, k_prime, normalize_switch_sequence, permute_colors_via_switches
from .coloring import EdgeColoring, ParityError, Switch, apply_switch, chain_edge_sets, cut_color_check, iter_colorings
from .compose import HPlan, YPlan, verify_multiplicativity
from .families import census, crossed_prism, graph_id, k33, k4, moebius_ladder, prism, theta
from .graph import MultiGraph, find_edge_cuts, is_bipartite


@dataclass
class CheckResult:
    name: str
    checked: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.name}: {self.checked} checked, {len(self.failures)} failures"


def parity_suite(max_n: int = 10, simple: bool = True) -> CheckResult:
    """Every 2-cut monochromatic, every 3-cut rainbow, for all colourings of census graphs."""
    res = CheckResult(f"cut parity, census n <= {max_n}")
    for g in census(max_n, simple=simple, min_n=4):
        cuts = find_edge_cuts(g, 2) + find_edge_cuts(g, 3)
        for colors in iter_colorings(g, 3):
            c = EdgeColoring(g, colors, 3)
            for cut in cuts:
                res.checked += 1
                try:
                    cut_color_check(c, cut)
                except ParityError as exc:
                    res.failures.append({"graph": graph_id(g), "coloring": list(colors), "error": str(exc)})
    return res


def fix_suite(max_n: int = 10, simple: bool = True) -> CheckResult:
    """Raw and fixed-vertex class counts agree."""
    res = CheckResult(f"raw vs fixed-vertex K', census n <= {max_n}")
    for g in census(max_n, simple=simple, min_n=4):
        res.checked += 1
        raw, fixed = k_prime(g, 3, RAW), k_prime(g, 3, FIXED)
        if raw != fixed:
            res.failures.append({"graph": graph_id(g), "raw": raw, "fixed": fixed})
    return res


def family_expectations(max_k: int = 8, max_cpr: int = 4) -> list[tuple[str, MultiGraph, int]]:
    rows = []
    for k in range(3, max_k + 1):
        rows.append((f"ML_{k}", moebius_ladder(k), 1 if k % 2 == 0 else 2))
    for k in range(3, max_k + 1):
        rows.append((f"Pr_{k}", prism(k), 1))
    for k in range(2, max_cpr + 1):
        rows.append((f"CPr_{k}", crossed_prism(k), 1))
    return rows


def families_suite(max_k: int = 8, max_cpr: int = 4) -> CheckResult:
    res = CheckResult(f"family K' values, k <= {max_k}")
    for name, g, want in family_expectations(max_k, max_cpr):
        res.checked += 1
        got = k_prime(g, 3)
        if got != want:
            res.failures.append({"graph": name, "expected": want, "k_prime": got})
        bip = is_bipartite(g) is not None
        k = int(name.split("_")[1])
        want_bip = {"ML": k % 2 == 1, "Pr": k % 2 == 0, "CPr": True}[name.split("_")[0]]
        if bip != want_bip:
            res.failures.append({"graph": name, "bipartite": bip, "expected_bipartite": want_bip})
    return res


def random_switch_sequence(c: EdgeColoring, length: int, v: int, rng: random.Random) -> SwitchSequence:
    """A random walk of switches, closed off so the end agrees with ``c`` at ``v``."""
    g, n = c.graph, c.n
    steps = []
    colors = c.colors
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    for _ in range(length):
        pair = rng.choice(pairs)
        chains = chain_edge_sets(g, colors, n, pair)
        if not chains:
            continue
        chain = rng.choice(chains)
        steps.append(Switch(pair, rng.choice(chain)))
        colors = apply_switch(EdgeColoring(g, colors, n), steps[-1]).colors
    end = EdgeColoring(g, colors, n)
    # rename colours so the edges at v carry their starting colours again
    perm = list(range(n))
    at_v = [(end.colors[e], c.colors[e]) for e in g.incidence[v]]
    for now, was in at_v:
        perm[now] = was
    missing_src = [x for x in range(n) if x not in {a for a, _ in at_v}]
    missing_dst = [x for x in range(n) if x not in {b for _, b in at_v}]
    for a, b in zip(missing_src, missing_dst):
        perm[a] = b
    fix = permute_colors_via_switches(end, perm)
    return SwitchSequence(c, tuple(steps) + fix.steps)


def normalization_suite(trials: int = 1000, seed: int = 0, max_len: int = 12,
                        graphs: list[tuple[str, MultiGraph]] | None = None) -> CheckResult:
    """Normalised sequences avoid v's edges and end exactly at the original endpoint."""
    if graphs is None:
        graphs = [("Pr_4", prism(4)), ("ML_4", moebius_ladder(4)), ("K_3,3", k33())]
    rng = random.Random(seed)
    colorings = {name: sorted(iter_colorings(g, 3)) for name, g in graphs}
    res = CheckResult(f"switch-sequence normalisation, {trials} trials")
    for t in range(trials):
        name, g = graphs[t % len(graphs)]
        c = EdgeColoring(g, rng.choice(colorings[name]), 3)
        v = rng.randrange(g.n)
        seq = random_switch_sequence(c, rng.randint(0, max_len), v, rng)
        d = seq.end
        out = normalize_switch_sequence(seq, v)
        res.checked += 1
        blocked = set(g.incidence[v])
        touched = out.touched_edges()
        bad_touch = any(blocked.intersection(ch) for ch in touched)
        if bad_touch or out.end.colors != d.colors:
            res.failures.append({"graph": name, "vertex": v, "start": list(c.colors),
                                 "steps": [(s.pair, s.seed) for s in seq.steps],
                                 "touches_v": bad_touch})
    return res


POOL = {"K_4": k4, "K_3,3": k33, "theta": theta, "Pr_3": lambda: prism(3), "Pr_4": lambda: prism(4)}


def random_plan(op: str, rng: random.Random) -> tuple[str, str, YPlan | HPlan]:
    n1, n2 = rng.choice(sorted(POOL)), rng.choice(sorted(POOL))
    g1, g2 = POOL[n1](), POOL[n2]()
    if op == "y":
        v1, v2 = rng.randrange(g1.n), rng.randrange(g2.n)
        ys = list(g2.incidence[v2])
        rng.shuffle(ys)
        return n1, n2, YPlan(g1, g2, v1, v2, tuple(zip(g1.incidence[v1], ys)))
    x, y = rng.randrange(g1.m), rng.randrange(g2.m)
    (a1, a2), (b1, b2) = g1.edges[x], g2.edges[y]
    if rng.random() < 0.5:
        b1, b2 = b2, b1
    return n1, n2, HPlan(g1, g2, x, y, ((a1, b1), (a2, b2)))


def multiplicativity_suite(trials: int = 20, seed: int = 0, ops: tuple[str, ...] = ("y", "h")) -> CheckResult:
    rng = random.Random(seed)
    res = CheckResult(f"K' multiplicativity, {trials} random plans per operation")
    for op in ops:
        for _ in range(trials):
            n1, n2, plan = random_plan(op, rng)
            rep = verify_multiplicativity(plan.g1, plan.g2, plan)
            res.checked += 1
            if not rep.passed:
                res.failures.append({"op": op, "g1": n1, "g2": n2, **(rep.counterexample or {})})
    return res
