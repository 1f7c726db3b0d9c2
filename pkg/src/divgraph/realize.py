"""Realizing bipartite graphs as divisor graphs, and the dual set.

Given parts ``v_1..v_m`` and ``u_1..u_n``, vertex ``v_l`` becomes the
``l``-th prime ``p_l`` and ``u_j`` becomes ``x_j = prod(p_l ** j)`` over the
``v_l`` adjacent to ``u_j``. The exponent ``j`` keeps the ``x_j`` distinct
even when two ``u_j`` have the same neighbourhood.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, FrozenSet, Hashable, Iterable, List, Sequence, Tuple

from .arith import first_primes
from .divisor import IntegerSet, build_B, make_integer_set, number_label, prime_label
from .graph import SimpleGraph

# Sizes past this make the realized integers unwieldy to print.
LARGE_REALIZATION = 64


class IsolatedVertex(ValueError):
    """The graph has an isolated vertex and is not the B(X) of any set."""

    def __init__(self, vertex: Hashable):
        super().__init__(f"isolated vertex {vertex!r}: no set X realizes this graph")
        self.vertex = vertex


@dataclass(frozen=True)
class BipartitionedGraph:
    part1: Tuple[Hashable, ...]
    part2: Tuple[Hashable, ...]
    edges: FrozenSet[Tuple[Hashable, Hashable]]

    def __post_init__(self):
        if not self.part1 or not self.part2:
            raise ValueError("both parts must be non-empty")
        if len(set(self.part1)) != len(self.part1) or len(set(self.part2)) != len(self.part2):
            raise ValueError("duplicate vertex inside a part")
        common = set(self.part1) & set(self.part2)
        if common:
            raise ValueError(f"vertex {sorted(map(str, common))[0]} appears in both parts")
        p1, p2 = set(self.part1), set(self.part2)
        for a, b in self.edges:
            if a not in p1 or b not in p2:
                raise ValueError(f"edge ({a!r}, {b!r}) does not join part1 to part2")

    @classmethod
    def from_edges(
        cls, part1: Sequence[Hashable], part2: Sequence[Hashable], edges: Iterable[Tuple[Hashable, Hashable]]
    ) -> "BipartitionedGraph":
        """Build from edges given in either orientation."""
        p1 = set(part1)
        norm = set()
        for a, b in edges:
            norm.add((a, b) if a in p1 else (b, a))
        return cls(tuple(part1), tuple(part2), frozenset(norm))

    def isolated(self) -> List[Hashable]:
        touched = {a for a, _ in self.edges} | {b for _, b in self.edges}
        return [v for v in self.part1 + self.part2 if v not in touched]

    def to_graph(self) -> SimpleGraph:
        return SimpleGraph(self.part1 + self.part2, sorted(self.edges, key=repr))


@dataclass(frozen=True)
class RealizationResult:
    x: IntegerSet
    prime_of: Dict[Hashable, int]
    number_of: Dict[Hashable, int]

    def vertex_map(self) -> Dict[Hashable, Tuple[str, int]]:
        """The isomorphism from the input graph onto the labels of build_B(x)."""
        out = {v: prime_label(p) for v, p in self.prime_of.items()}
        out.update({u: number_label(n) for u, n in self.number_of.items()})
        return out


def realize(g: BipartitionedGraph) -> RealizationResult:
    isolated = g.isolated()
    if isolated:
        raise IsolatedVertex(isolated[0])
    primes = first_primes(len(g.part1))
    prime_of = dict(zip(g.part1, primes))
    number_of: Dict[Hashable, int] = {}
    factorizations: Dict[int, Dict[int, int]] = {}
    for j, u in enumerate(g.part2, start=1):
        support = {prime_of[v]: j for v in g.part1 if (v, u) in g.edges}
        x = 1
        for p in support:
            x *= p**j
        number_of[u] = x
        factorizations[x] = support
    xs = make_integer_set(number_of.values(), factorizations=factorizations)
    assert len(xs.xstar) == len(g.part2)
    return RealizationResult(xs, prime_of, number_of)


def dualize(x: IntegerSet) -> RealizationResult:
    """Realize B(X) with its bipartition reversed.

    X* (ascending) takes the role of the prime side and rho(X) (ascending)
    the number side, so the returned set Y has Gamma(Y) matching Delta(X) and
    Delta(Y) matching Gamma(X). Map keys are the tagged labels of B(X).
    """
    b = build_B(x)
    g = BipartitionedGraph.from_edges(b.number_vertices, b.prime_vertices, b.edges())
    return realize(g)
