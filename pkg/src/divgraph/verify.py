"""Executable checks of the structural relations between B(X), Delta(X)
and Gamma(X), plus seeded random instance generation and a fuzz driver.

Every check returns a :class:`TheoremReport`. Failed reports carry the input
set (or graph) in ``detail`` so :func:`replay` can rerun them.
"""
from __future__ import annotations

import json
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Any, Dict, Iterable, List, Optional, Sequence, Tuple

from .divisor import (
    NUMBER,
    PRIME,
    IntegerSet,
    build_B,
    build_delta,
    build_gamma,
    distance2_graph,
    make_integer_set,
)
from .graph import (
    SimpleGraph,
    classify_component,
    components,
    diameter,
    find_subgraph,
    girth,
    girth_gt4,
    is_connected,
    is_embedding,
    is_forest,
    label_str,
)
from .patterns import check_inc_condition, diagnose_k4, diagnose_triangles, inc_pattern
from .realize import BipartitionedGraph, IsolatedVertex, realize

SMOOTH_PRIMES = (2, 3, 5, 7, 11, 13)

CHECK_IDS = (
    "distance_relations",
    "component_counts",
    "diameter_dichotomy",
    "girth_relation",
    "triangle_witness",
    "acyclic_components",
    "incidence_clique",
    "k4_patterns",
    "oracle_agreement",
    "realization_roundtrip",
)


@dataclass(frozen=True)
class TheoremReport:
    theorem_id: str
    passed: bool
    detail: Dict[str, Any] = field(default_factory=dict)

    def to_json(self) -> Dict[str, Any]:
        return {"theorem": self.theorem_id, "passed": self.passed, "detail": self.detail}

    def to_line(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


@dataclass(frozen=True)
class _Graphs:
    x: IntegerSet
    B: SimpleGraph
    delta: SimpleGraph
    gamma: SimpleGraph


@lru_cache(maxsize=32)
def _graphs(x: IntegerSet) -> _Graphs:
    return _Graphs(x, build_B(x).graph, build_delta(x), build_gamma(x))


def _xs(x: IntegerSet) -> List[int]:
    return list(x.elements)


def _names(labels: Iterable) -> List[str]:
    return sorted(label_str(v) for v in labels)


# -- distances, components, diameters ----------------------------------------


def verify_distance_relations(x: IntegerSet) -> TheoremReport:
    """Distances double from Delta/Gamma to B; edge-linked pairs differ by 0 or 2.

    Checks every same-side pair in a common B-component, then every pair of
    edges (p, x), (q, y) in one component, including the equality of the
    B-component of p with the union of the Delta-component of p and the
    Gamma-component of x.
    """
    g = _graphs(x)
    B = g.B
    n = len(B)
    dist = B.distance_matrix()
    violations: List[Dict[str, Any]] = []

    for small in (g.delta, g.gamma):
        sd = small.distance_matrix()
        sn = len(small)
        for i, j in combinations(range(sn), 2):
            u, v = small.vertices[i], small.vertices[j]
            db = dist[B.index(u) * n + B.index(v)]
            if db < 0:
                continue
            ds = sd[i * sn + j]
            if ds < 0 or db != 2 * ds:
                violations.append({"part": "doubling", "u": label_str(u), "v": label_str(v), "d_B": db, "d_small": ds})

    delta_blocks = {v: b for b in components(g.delta) for v in b}
    gamma_blocks = {v: b for b in components(g.gamma) for v in b}
    for block in components(B):
        edges = [(p, y) for p in block if p[0] == PRIME for y in B.neighbors(p)]
        for p, y in edges:
            union = delta_blocks[p] | gamma_blocks[y]
            if union != block:
                violations.append({"part": "component_union", "p": label_str(p), "x": label_str(y),
                                   "B_component": _names(block), "union": _names(union)})
        idx = [(B.index(p), B.index(y)) for p, y in edges]
        for (ip, ix), (iq, iy) in combinations(idx, 2):
            diff = dist[ip * n + iq] - dist[ix * n + iy]
            if diff not in (-2, 0, 2):
                violations.append({"part": "edge_pairs", "p": label_str(B.vertices[ip]), "x": label_str(B.vertices[ix]),
                                   "q": label_str(B.vertices[iq]), "y": label_str(B.vertices[iy]), "difference": diff})
    return TheoremReport("distance_relations", not violations, {"X": _xs(x), "violations": violations[:10]})


def verify_components(x: IntegerSet) -> TheoremReport:
    g = _graphs(x)
    counts = [len(components(h)) for h in (g.B, g.delta, g.gamma)]
    return TheoremReport("component_counts", len(set(counts)) == 1, {"X": _xs(x), "n_B_Delta_Gamma": counts})


def diameter_case(d_delta: int, d_gamma: int, d_b: int) -> Optional[str]:
    """Which diameter case holds: ``"even"``, ``"odd"``, or None if neither."""
    if d_b == 2 * max(d_delta, d_gamma) and abs(d_delta - d_gamma) <= 1:
        return "even"
    if d_b % 2 == 1 and 2 * d_delta == d_b - 1 and d_delta == d_gamma:
        return "odd"
    return None


def verify_diameters(x: IntegerSet) -> TheoremReport:
    g = _graphs(x)
    dd, dg, db = diameter(g.delta), diameter(g.gamma), diameter(g.B)
    case = diameter_case(dd, dg, db)
    return TheoremReport("diameter_dichotomy", case is not None,
                         {"X": _xs(x), "diam_Delta_Gamma_B": [dd, dg, db], "case": case})


# -- cycles ------------------------------------------------------------------


def verify_girths(x: IntegerSet) -> TheoremReport:
    g = _graphs(x)
    long_cycle = girth_gt4(g.B)
    detail: Dict[str, Any] = {"X": _xs(x), "girth_gt4_B": long_cycle}
    if long_cycle is None:
        detail["vacuous"] = True
        return TheoremReport("girth_relation", True, detail)
    k = long_cycle // 2
    gd, gg = girth(g.delta), girth(g.gamma)
    detail.update({"girth_Delta": gd, "girth_Gamma": gg, "half": k})
    ok = gd is not None and gg is not None and gd in (3, k) and gg in (3, k)
    return TheoremReport("girth_relation", ok, detail)


def verify_triangles(x: IntegerSet) -> TheoremReport:
    g = _graphs(x)
    diag = diagnose_triangles(x)
    ok = diag.consistent
    if diag.witness is not None:
        from .patterns import catalog

        shape = catalog("K13" if diag.witness_kind == "InducedK13" else "C6")
        ok = ok and is_embedding(g.B, shape, diag.witness)
    return TheoremReport("triangle_witness", ok, {"X": _xs(x), **diag.to_json()})


def verify_acyclic(x: IntegerSet) -> TheoremReport:
    """Delta and Gamma are forests exactly when every B-component is a path or
    a 4-cycle; they are trees exactly when B is a single path or a 4-cycle."""
    g = _graphs(x)
    shapes = [classify_component(g.B, b) for b in components(g.B)]
    forests = is_forest(g.delta) and is_forest(g.gamma)
    tame = all(s in ("Path", "Cycle4") for s in shapes)
    trees = forests and is_connected(g.delta) and is_connected(g.gamma)
    single = len(shapes) == 1 and tame
    ok = forests == tame and trees == single
    return TheoremReport("acyclic_components", ok, {
        "X": _xs(x), "component_shapes": shapes, "forests": forests, "trees": trees,
    })


# -- cliques -----------------------------------------------------------------


def _representatives_valid(x: IntegerSet, cond) -> bool:
    reps = list(cond.representatives.values())
    if len(set(reps)) != len(reps) or len(reps) != cond.ell * (cond.ell - 1) // 2:
        return False
    for (a, b), r in cond.representatives.items():
        if cond.via == "gamma" and not (a % r == 0 and b % r == 0):
            return False
        if cond.via == "delta" and r % (a * b) != 0:
            return False
    return True


def verify_inc(x: IntegerSet, ell: int) -> TheoremReport:
    g = _graphs(x)
    cond = check_inc_condition(x, ell)
    emb = find_subgraph(g.B, inc_pattern(ell), induced=False)
    ok = cond.holds == (emb is not None)
    if cond.holds:
        ok = ok and _representatives_valid(x, cond)
    return TheoremReport("incidence_clique", ok, {
        "X": _xs(x), "ell": ell, "condition": cond.to_json(), "embeds": emb is not None,
    })


def verify_k4(x: IntegerSet) -> TheoremReport:
    diag = diagnose_k4(x)
    bad = diag.violations()
    return TheoremReport("k4_patterns", not bad, {"X": _xs(x), "violations": bad, **diag.to_json()})


# -- independent oracles -----------------------------------------------------


def naive_distances(g: SimpleGraph) -> Dict[Tuple[Any, Any], float]:
    """Floyd-Warshall over labels, using only ``has_edge``."""
    inf = float("inf")
    vs = g.vertices
    d = {(u, v): (0 if u == v else 1 if g.has_edge(u, v) else inf) for u in vs for v in vs}
    for k in vs:
        for i in vs:
            dik = d[i, k]
            if dik == inf:
                continue
            for j in vs:
                if dik + d[k, j] < d[i, j]:
                    d[i, j] = dik + d[k, j]
    return d


def naive_diameter(g: SimpleGraph) -> Optional[int]:
    if not g.vertices:
        return None
    return int(max(v for v in naive_distances(g).values() if v != float("inf")))


def naive_component_count(g: SimpleGraph) -> int:
    parent = {v: v for v in g.vertices}

    def root(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for u, v in g.edges():
        parent[root(u)] = root(v)
    return len({root(v) for v in g.vertices})


def verify_oracles(x: IntegerSet) -> TheoremReport:
    """Factorization-built Delta/Gamma against distance-2 graphs of B, and
    BFS diameters/component counts against naive recomputation."""
    g = _graphs(x)
    b = build_B(x)
    mismatches = []
    if distance2_graph(b, "primes") != g.delta:
        mismatches.append("Delta")
    if distance2_graph(b, "numbers") != g.gamma:
        mismatches.append("Gamma")
    for name, h in (("B", g.B), ("Delta", g.delta), ("Gamma", g.gamma)):
        if diameter(h) != naive_diameter(h):
            mismatches.append(f"diam_{name}")
        if len(components(h)) != naive_component_count(h):
            mismatches.append(f"n_{name}")
    return TheoremReport("oracle_agreement", not mismatches, {"X": _xs(x), "mismatches": mismatches})


# -- realization -------------------------------------------------------------


def graph_detail(g: BipartitionedGraph) -> Dict[str, Any]:
    return {"part1": [str(v) for v in g.part1], "part2": [str(v) for v in g.part2],
            "edges": sorted([str(a), str(b)] for a, b in g.edges)}


def roundtrip_realize(g: BipartitionedGraph) -> TheoremReport:
    detail: Dict[str, Any] = {"graph": graph_detail(g)}
    if g.isolated():
        try:
            realize(g)
        except IsolatedVertex as exc:
            detail["raised"] = str(exc)
            return TheoremReport("realization_roundtrip", True, detail)
        return TheoremReport("realization_roundtrip", False, detail)
    res = realize(g)
    vmap = res.vertex_map()
    image = {frozenset((vmap[a], vmap[b])) for a, b in g.edges}
    B = build_B(res.x).graph
    ok = (
        image == B.edge_set()
        and set(vmap.values()) == set(B.vertices)
        and len(res.x.xstar) == len(g.part2)
        and set(res.x.rho) == set(res.prime_of.values())
    )
    detail["X"] = [str(v) for v in res.x.elements]
    return TheoremReport("realization_roundtrip", ok, detail)


# -- drivers -----------------------------------------------------------------


def verify_all(x: IntegerSet, ell_values: Sequence[int] = (3, 4)) -> List[TheoremReport]:
    reports = [
        verify_distance_relations(x),
        verify_components(x),
        verify_diameters(x),
        verify_girths(x),
        verify_triangles(x),
        verify_acyclic(x),
    ]
    reports.extend(verify_inc(x, ell) for ell in ell_values)
    reports.append(verify_k4(x))
    reports.append(verify_oracles(x))
    return reports


_BY_ID = {
    "distance_relations": verify_distance_relations,
    "component_counts": verify_components,
    "diameter_dichotomy": verify_diameters,
    "girth_relation": verify_girths,
    "triangle_witness": verify_triangles,
    "acyclic_components": verify_acyclic,
    "k4_patterns": verify_k4,
    "oracle_agreement": verify_oracles,
}


def replay(report: TheoremReport) -> TheoremReport:
    """Rerun the check named by ``report`` on the input recorded in it."""
    d = report.detail
    if report.theorem_id == "realization_roundtrip":
        gd = d["graph"]
        return roundtrip_realize(BipartitionedGraph.from_edges(gd["part1"], gd["part2"], map(tuple, gd["edges"])))
    x = make_integer_set(d["X"])
    if report.theorem_id == "incidence_clique":
        return verify_inc(x, d["ell"])
    return _BY_ID[report.theorem_id](x)


@dataclass(frozen=True)
class FuzzConfig:
    trials: int = 1000
    max_set_size: int = 7
    max_element: int = 10**4
    seed: int = 0
    ell_values: Tuple[int, ...] = (3, 4)
    workers: int = 1


def random_set(rng: random.Random, max_set_size: int = 7, max_element: int = 10**4) -> IntegerSet:
    """Uniform elements in half the draws, products of primes up to 13 otherwise."""
    size = rng.randint(1, max_set_size)
    if rng.random() < 0.5:
        elems = rng.sample(range(2, max_element + 1), min(size, max_element - 1))
    else:
        elems = []
        while len(elems) < size:
            k = rng.randint(1, 4)
            n = 1
            for p in rng.sample(SMOOTH_PRIMES, k):
                n *= p ** rng.randint(1, 2)
            if n <= max_element:
                elems.append(n)
    return make_integer_set(elems)


def random_bipartitioned(rng: random.Random, max_part: int = 6, p: float = 0.5,
                         allow_isolated: bool = True) -> BipartitionedGraph:
    """Random bipartite graph; with ``allow_isolated=False`` isolated vertices
    are patched with one random edge each."""
    m, n = rng.randint(1, max_part), rng.randint(1, max_part)
    part1 = [f"v{i}" for i in range(1, m + 1)]
    part2 = [f"u{j}" for j in range(1, n + 1)]
    edges = {(a, b) for a in part1 for b in part2 if rng.random() < p}
    if not allow_isolated:
        for a in part1:
            if not any(e[0] == a for e in edges):
                edges.add((a, rng.choice(part2)))
        for b in part2:
            if not any(e[1] == b for e in edges):
                edges.add((rng.choice(part1), b))
    return BipartitionedGraph(tuple(part1), tuple(part2), frozenset(edges))


def _trial(args: Tuple[FuzzConfig, int]) -> List[TheoremReport]:
    cfg, i = args
    rng = random.Random(f"{cfg.seed}:{i}")
    x = random_set(rng, cfg.max_set_size, cfg.max_element)
    g = random_bipartitioned(rng)
    reports = verify_all(x, cfg.ell_values) + [roundtrip_realize(g)]
    return [TheoremReport(r.theorem_id, r.passed, {**r.detail, "trial": i}) for r in reports]


def fuzz(cfg: FuzzConfig) -> List[TheoremReport]:
    """Run ``cfg.trials`` seeded trials; failed reports come first.

    Trial ``i`` draws from its own generator seeded by ``(seed, i)``, so the
    output does not depend on ``workers``.
    """
    jobs = [(cfg, i) for i in range(cfg.trials)]
    if cfg.workers > 1 and cfg.trials > 1:
        with ProcessPoolExecutor(cfg.workers) as pool:
            batches = list(pool.map(_trial, jobs, chunksize=max(1, cfg.trials // (8 * cfg.workers))))
    else:
        batches = [_trial(j) for j in jobs]
    reports = [r for batch in batches for r in batch]
    return [r for r in reports if not r.passed] + [r for r in reports if r.passed]
