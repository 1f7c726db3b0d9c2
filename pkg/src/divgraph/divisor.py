"""Divisor graphs of a finite set of positive integers.

Vertices are tagged pairs ``("p", prime)`` and ``("x", element)`` so that a
prime and an element with the same value (2 in ``{2, 4}``) stay distinct.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations
from typing import Any, Dict, Iterable, Mapping, Optional, Tuple

from .arith import DEFAULT_TRIAL_BOUND, expand, factorize, is_prime
from .graph import SimpleGraph, label_str

PRIME = "p"
NUMBER = "x"


class EmptyOrTrivial(ValueError):
    """The input set is empty or contains only 1."""


def prime_label(p: int) -> Tuple[str, int]:
    return (PRIME, p)


def number_label(x: int) -> Tuple[str, int]:
    return (NUMBER, x)


def values(labels: Iterable[Tuple[str, int]]) -> list:
    """Strip tags, returning the integer values in ascending order."""
    return sorted(v for _, v in labels)


@dataclass(frozen=True)
class IntegerSet:
    """A validated finite set of positive integers together with the
    factorization of every element other than 1."""

    elements: Tuple[int, ...]
    factors: Mapping[int, Dict[int, int]] = field(repr=False, compare=False)

    @property
    def xstar(self) -> Tuple[int, ...]:
        return tuple(x for x in self.elements if x != 1)

    @property
    def rho(self) -> Tuple[int, ...]:
        return tuple(sorted({p for x in self.xstar for p in self.factors[x]}))

    def primes_of(self, x: int) -> Tuple[int, ...]:
        return tuple(self.factors[x])

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)


def make_integer_set(
    raw: Iterable[int],
    bound: int = DEFAULT_TRIAL_BOUND,
    factorizations: Optional[Mapping[int, Mapping[int, int]]] = None,
) -> IntegerSet:
    """Deduplicate and validate ``raw``.

    Elements equal to 1 are kept in the set but excluded from X*. Known
    factorizations may be passed for elements too large to factor by trial
    division; each one is checked by multiplying it out.
    """
    elements = []
    for x in raw:
        if isinstance(x, bool) or not isinstance(x, int) or x < 1:
            raise ValueError(f"not a positive integer: {x!r}")
        elements.append(x)
    elements = sorted(set(elements))
    if not elements or elements == [1]:
        raise EmptyOrTrivial(f"X must contain an integer greater than 1, got {elements}")
    factors: Dict[int, Dict[int, int]] = {}
    for x in elements:
        if x == 1:
            continue
        if factorizations is not None and x in factorizations:
            f = dict(sorted(factorizations[x].items()))
            if expand(f) != x or not all(is_prime(p) and e >= 1 for p, e in f.items()):
                raise ValueError(f"invalid factorization supplied for {x}: {f}")
        else:
            f = factorize(x, bound)
        factors[x] = f
    return IntegerSet(tuple(elements), factors)


@dataclass(frozen=True)
class BipartiteDivisorGraph:
    """B(X): primes on one side, elements of X* on the other, joined by divisibility."""

    source: IntegerSet
    graph: SimpleGraph

    @property
    def prime_vertices(self) -> Tuple[Tuple[str, int], ...]:
        return tuple(prime_label(p) for p in self.source.rho)

    @property
    def number_vertices(self) -> Tuple[Tuple[str, int], ...]:
        return tuple(number_label(x) for x in self.source.xstar)

    def edges(self):
        """(prime, number) label pairs."""
        return [(u, v) if u[0] == PRIME else (v, u) for u, v in self.graph.edges()]

    def side(self, which: str) -> Tuple[Tuple[str, int], ...]:
        if which in ("primes", PRIME):
            return self.prime_vertices
        if which in ("numbers", NUMBER):
            return self.number_vertices
        raise ValueError(f"unknown side {which!r}")


def build_B(x: IntegerSet) -> BipartiteDivisorGraph:
    vertices = [prime_label(p) for p in x.rho] + [number_label(n) for n in x.xstar]
    edges = [(prime_label(p), number_label(n)) for n in x.xstar for p in x.factors[n]]
    return BipartiteDivisorGraph(x, SimpleGraph(vertices, edges))


def build_delta(x: IntegerSet) -> SimpleGraph:
    """Prime vertex graph: p ~ q when pq divides some element."""
    edges = set()
    for n in x.xstar:
        for p, q in combinations(x.factors[n], 2):
            edges.add((prime_label(p), prime_label(q)))
    return SimpleGraph([prime_label(p) for p in x.rho], sorted(edges))


def build_gamma(x: IntegerSet) -> SimpleGraph:
    """Common divisor graph: x ~ y when gcd(x, y) > 1."""
    xs = x.xstar
    edges = [(number_label(a), number_label(b)) for a, b in combinations(xs, 2) if math.gcd(a, b) > 1]
    return SimpleGraph([number_label(n) for n in xs], edges)


def distance2_graph(b: BipartiteDivisorGraph, side: str) -> SimpleGraph:
    """Graph on one side of B joining the pairs at distance exactly 2 in B."""
    g = b.graph
    verts = b.side(side)
    n = len(g)
    dist = g.distance_matrix()
    idx = [g.index(v) for v in verts]
    edges = [(verts[a], verts[c]) for a, c in combinations(range(len(verts)), 2) if dist[idx[a] * n + idx[c]] == 2]
    return SimpleGraph(verts, edges)


# -- JSON ------------------------------------------------------------------


def graph_to_json(g: SimpleGraph) -> Dict[str, Any]:
    verts = []
    for v in g.vertices:
        if isinstance(v, tuple) and len(v) == 2 and v[0] in (PRIME, NUMBER):
            verts.append({"id": label_str(v), "tag": "prime" if v[0] == PRIME else "number", "value": v[1]})
        else:
            verts.append({"id": label_str(v)})
    return {"vertices": verts, "edges": [[label_str(u), label_str(v)] for u, v in g.edges()]}


def set_to_json(x: IntegerSet) -> Dict[str, Any]:
    """B, Delta and Gamma of ``x`` with the input set as provenance."""
    return {
        "X": list(x.elements),
        "rho": list(x.rho),
        "xstar": list(x.xstar),
        "B": graph_to_json(build_B(x).graph),
        "Delta": graph_to_json(build_delta(x)),
        "Gamma": graph_to_json(build_gamma(x)),
    }
