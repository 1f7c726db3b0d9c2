"""Pattern graphs and the clique detectors built on them.

Catalog names: C4, C6, K13, K14right, K41right, IncK3, IncK4, ScriptK,
ScriptG, LK4. Patterns meant to sit inside B(X) carry ``"p"``/``"x"`` tags
on their vertices when the side matters: ``K14right`` has one prime and
four numbers, ``K41right`` four primes and one number.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Dict, FrozenSet, Hashable, List, Optional, Sequence, Tuple

from .arith import first_primes
from .divisor import NUMBER, PRIME, IntegerSet, build_B, build_delta, build_gamma, make_integer_set
from .graph import (
    Embedding,
    SimpleGraph,
    cliques,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    find_subgraph,
    has_clique,
    label_str,
)

PATTERN_NAMES = ("C4", "C6", "K13", "K14right", "K41right", "IncK3", "IncK4", "ScriptK", "ScriptG", "LK4")
K4_PATTERNS = ("K14right", "K41right", "IncK4", "ScriptK", "ScriptG")
# K4 patterns that certify a K4 in Delta, resp. Gamma.
DELTA_K4_PATTERNS = frozenset({"K41right", "IncK4", "ScriptK", "ScriptG"})
GAMMA_K4_PATTERNS = frozenset({"K14right", "IncK4", "ScriptK", "ScriptG"})


def incidence_graph(g: SimpleGraph) -> SimpleGraph:
    """Bipartite graph joining ``("v", v)`` to ``("e", edge)`` when v lies on edge."""
    edges = g.edges()
    vertices = [("v", v) for v in g.vertices] + [("e", e) for e in edges]
    return SimpleGraph(vertices, [(("v", end), ("e", e)) for e in edges for end in e])


def line_graph(g: SimpleGraph) -> SimpleGraph:
    edges = g.edges()
    adjacent = [(e, f) for e, f in combinations(edges, 2) if set(e) & set(f)]
    return SimpleGraph(edges, adjacent)


def oriented_star(primes: int, numbers: int) -> SimpleGraph:
    """Complete bipartite graph with ``primes`` prime-tagged and ``numbers`` number-tagged vertices."""
    return complete_bipartite([(PRIME, i) for i in range(primes)], [(NUMBER, j) for j in range(numbers)])


def _realized(exponents: Sequence[Sequence[int]]) -> SimpleGraph:
    # Each row lists exponents of the first primes for one element.
    ps = first_primes(max(len(r) for r in exponents))
    xs = []
    for row in exponents:
        n = 1
        for p, e in zip(ps, row):
            n *= p**e
        xs.append(n)
    return build_B(make_integer_set(xs)).graph


@lru_cache(maxsize=None)
def catalog(name: str) -> SimpleGraph:
    if name == "C4":
        return cycle_graph(4)
    if name == "C6":
        return cycle_graph(6)
    if name == "K13":
        return complete_bipartite(["center"], ["leaf0", "leaf1", "leaf2"])
    if name == "K14right":
        return oriented_star(1, 4)
    if name == "K41right":
        return oriented_star(4, 1)
    if name == "IncK3":
        return incidence_graph(complete_graph(3))
    if name == "IncK4":
        return incidence_graph(complete_graph(4))
    if name == "ScriptK":
        # p1 p2, p1^2 p2, p1 p3, p2 p3
        return _realized([(1, 1, 0), (2, 1, 0), (1, 0, 1), (0, 1, 1)])
    if name == "ScriptG":
        # p1 p2, p1 p3, p1 p4, p2 p3 p4
        return _realized([(1, 1, 0, 0), (1, 0, 1, 0), (1, 0, 0, 1), (0, 1, 1, 1)])
    if name == "LK4":
        return line_graph(complete_graph(4))
    raise KeyError(f"unknown pattern {name!r}; expected one of {', '.join(PATTERN_NAMES)}")


def find_in_B(b_graph: SimpleGraph, name: str) -> Optional[Embedding]:
    """Embed a catalog pattern into a divisor graph B (non-induced).

    Oriented patterns send prime-tagged vertices to primes; the others are
    connected and bipartite, so any embedding already maps sides to sides
    and both orientations are covered by one search.
    """
    pattern = catalog(name)
    domains = None
    if name in ("K14right", "K41right"):
        primes = [v for v in b_graph.vertices if v[0] == PRIME]
        numbers = [v for v in b_graph.vertices if v[0] == NUMBER]
        domains = {v: primes if v[0] == PRIME else numbers for v in pattern.vertices}
    return find_subgraph(b_graph, pattern, induced=False, domains=domains)


# -- triangles ---------------------------------------------------------------


@dataclass(frozen=True)
class TriangleDiagnosis:
    has_triangle_delta: bool
    has_triangle_gamma: bool
    witness: Optional[Embedding]
    witness_kind: Optional[str]  # "InducedK13", "InducedC6" or None

    @property
    def consistent(self) -> bool:
        return (self.has_triangle_delta or self.has_triangle_gamma) == (self.witness_kind is not None)

    def to_json(self) -> dict:
        return {
            "has_triangle_delta": self.has_triangle_delta,
            "has_triangle_gamma": self.has_triangle_gamma,
            "witness_kind": self.witness_kind,
            "witness": _embedding_json(self.witness),
        }


def _embedding_json(emb: Optional[Embedding]) -> Optional[Dict[str, str]]:
    if emb is None:
        return None
    return {label_str(k): label_str(v) for k, v in emb.mapping.items()}


def induced_claw(b_graph: SimpleGraph) -> Optional[Embedding]:
    """Induced K_{1,3} centred at the first vertex of degree at least 3.

    Leaves of a star in a bipartite graph share a side, so they are pairwise
    non-adjacent and the star is automatically induced.
    """
    for v in b_graph.vertices:
        nbrs = b_graph.neighbors(v)
        if len(nbrs) >= 3:
            mapping = {"center": v, "leaf0": nbrs[0], "leaf1": nbrs[1], "leaf2": nbrs[2]}
            return Embedding(mapping, induced=True)
    return None


def diagnose_triangles(x: IntegerSet) -> TriangleDiagnosis:
    b = build_B(x).graph
    delta = has_clique(build_delta(x), 3) is not None
    gamma = has_clique(build_gamma(x), 3) is not None
    witness = induced_claw(b)
    kind = "InducedK13" if witness else None
    if witness is None:
        witness = find_subgraph(b, catalog("C6"), induced=True)
        kind = "InducedC6" if witness else None
    return TriangleDiagnosis(delta, gamma, witness, kind)


# -- incidence graphs of complete graphs -------------------------------------


def max_matching(candidates: Sequence[Sequence[Hashable]]) -> Dict[int, Hashable]:
    """Maximum bipartite matching by augmenting paths.

    ``candidates[i]`` lists what left vertex ``i`` may be matched to. Returns
    ``{i: chosen}`` for the matched left vertices.
    """
    owner: Dict[Hashable, int] = {}

    def augment(i: int, seen: set) -> bool:
        for c in candidates[i]:
            if c in seen:
                continue
            seen.add(c)
            if c not in owner or augment(owner[c], seen):
                owner[c] = i
                return True
        return False

    for i in range(len(candidates)):
        augment(i, set())
    return {i: c for c, i in owner.items()}


@dataclass(frozen=True)
class IncCondition:
    """Outcome of the distinct-representatives test for Inc(K_l) inside B.

    ``via`` is ``"gamma"`` (a clique of elements with distinct shared primes),
    ``"delta"`` (a clique of primes with distinct common multiples in X*) or
    None when neither exists.
    """

    ell: int
    via: Optional[str]
    clique: Tuple[int, ...] = ()
    representatives: Dict[Tuple[int, int], int] = field(default_factory=dict)

    @property
    def holds(self) -> bool:
        return self.via is not None

    def to_json(self) -> dict:
        return {
            "ell": self.ell,
            "holds": self.holds,
            "via": self.via,
            "clique": list(self.clique),
            "representatives": [[i, j, r] for (i, j), r in sorted(self.representatives.items())],
        }


def _sdr(clique: Sequence[int], options) -> Optional[Dict[Tuple[int, int], int]]:
    pairs = list(combinations(clique, 2))
    cands = [options(a, b) for a, b in pairs]
    match = max_matching(cands)
    if len(match) < len(pairs):
        return None
    return {pairs[i]: c for i, c in match.items()}


def check_inc_condition(x: IntegerSet, ell: int) -> IncCondition:
    if ell < 2:
        raise ValueError("ell must be at least 2")
    support = {n: set(x.factors[n]) for n in x.xstar}
    for clique in cliques(build_gamma(x), ell):
        nums = tuple(v for _, v in clique)
        reps = _sdr(nums, lambda a, b: sorted(support[a] & support[b]))
        if reps is not None:
            return IncCondition(ell, "gamma", nums, reps)
    for clique in cliques(build_delta(x), ell):
        primes = tuple(v for _, v in clique)
        reps = _sdr(primes, lambda p, q: [n for n in x.xstar if p in support[n] and q in support[n]])
        if reps is not None:
            return IncCondition(ell, "delta", primes, reps)
    return IncCondition(ell, None)


def inc_pattern(ell: int) -> SimpleGraph:
    if ell == 3:
        return catalog("IncK3")
    if ell == 4:
        return catalog("IncK4")
    return incidence_graph(complete_graph(ell))


# -- K4 ----------------------------------------------------------------------


@dataclass(frozen=True)
class K4Diagnosis:
    delta_k4: Optional[FrozenSet]
    gamma_k4: Optional[FrozenSet]
    patterns: Dict[str, Embedding]

    def violations(self) -> List[str]:
        """Which of the three K4 implications fail (empty when all hold)."""
        found = set(self.patterns)
        bad = []
        if self.delta_k4 is not None and not (found & DELTA_K4_PATTERNS):
            bad.append("delta_k4_without_pattern")
        if self.gamma_k4 is not None and not (found & GAMMA_K4_PATTERNS):
            bad.append("gamma_k4_without_pattern")
        if found and self.delta_k4 is None and self.gamma_k4 is None:
            bad.append("pattern_without_k4")
        return bad

    def to_json(self) -> dict:
        return {
            "delta_k4": sorted(v for _, v in self.delta_k4) if self.delta_k4 else None,
            "gamma_k4": sorted(v for _, v in self.gamma_k4) if self.gamma_k4 else None,
            "patterns": {name: _embedding_json(e) for name, e in self.patterns.items()},
        }


def diagnose_k4(x: IntegerSet) -> K4Diagnosis:
    b = build_B(x).graph
    found = {}
    for name in K4_PATTERNS:
        emb = find_in_B(b, name)
        if emb is not None:
            found[name] = emb
    return K4Diagnosis(has_clique(build_delta(x), 4), has_clique(build_gamma(x), 4), found)
