"""Undirected simple graphs over opaque hashable labels.

Queries (distances, components, girth, subgraph search) run on an integer
indexing of the vertices and are dispatched to :mod:`divgraph.kernels`.
"Not found" style outcomes (unreachable, acyclic, no embedding) are ``None``.
"""
from __future__ import annotations

from array import array
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, FrozenSet, Hashable, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple

from . import kernels

Label = Hashable


class UnknownVertex(KeyError):
    pass


class SimpleGraph:
    """Immutable undirected graph without loops or multi-edges.

    Vertex order is the order of first appearance in ``vertices`` and is the
    order every query iterates in, which keeps results deterministic.
    """

    def __init__(self, vertices: Iterable[Label] = (), edges: Iterable[Tuple[Label, Label]] = ()):
        self.vertices: Tuple[Label, ...] = tuple(dict.fromkeys(vertices))
        self._index: Dict[Label, int] = {v: i for i, v in enumerate(self.vertices)}
        self._adj: List[set] = [set() for _ in self.vertices]
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at {u!r}")
            try:
                i, j = self._index[u], self._index[v]
            except KeyError as exc:
                raise ValueError(f"edge endpoint {exc.args[0]!r} is not a vertex") from None
            self._adj[i].add(j)
            self._adj[j].add(i)
        self._cache: dict = {}

    # -- basic structure -------------------------------------------------

    def __len__(self) -> int:
        return len(self.vertices)

    def __contains__(self, v: Label) -> bool:
        return v in self._index

    def __iter__(self) -> Iterator[Label]:
        return iter(self.vertices)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SimpleGraph):
            return NotImplemented
        return set(self.vertices) == set(other.vertices) and self.edge_set() == other.edge_set()

    def __hash__(self) -> int:
        return hash((frozenset(self.vertices), self.edge_set()))

    def __repr__(self) -> str:
        return f"SimpleGraph(n={len(self)}, m={self.number_of_edges()})"

    def index(self, v: Label) -> int:
        try:
            return self._index[v]
        except KeyError:
            raise UnknownVertex(v) from None

    def neighbors(self, v: Label) -> List[Label]:
        return [self.vertices[j] for j in sorted(self._adj[self.index(v)])]

    def degree(self, v: Label) -> int:
        return len(self._adj[self.index(v)])

    def degrees(self) -> List[int]:
        return [len(a) for a in self._adj]

    def has_edge(self, u: Label, v: Label) -> bool:
        return self.index(v) in self._adj[self.index(u)]

    def edges(self) -> List[Tuple[Label, Label]]:
        """Edges as pairs, each listed once in vertex order."""
        out = []
        for i, nbrs in enumerate(self._adj):
            for j in sorted(nbrs):
                if i < j:
                    out.append((self.vertices[i], self.vertices[j]))
        return out

    def edge_set(self) -> FrozenSet[FrozenSet[Label]]:
        if "edge_set" not in self._cache:
            self._cache["edge_set"] = frozenset(frozenset(e) for e in self.edges())
        return self._cache["edge_set"]

    def number_of_edges(self) -> int:
        return sum(len(a) for a in self._adj) // 2

    def subgraph(self, vertices: Iterable[Label]) -> "SimpleGraph":
        """Induced subgraph, keeping this graph's vertex order."""
        keep = {self.index(v) for v in vertices}
        order = [self.vertices[i] for i in sorted(keep)]
        return SimpleGraph(order, [(u, v) for u, v in self.edges() if self._index[u] in keep and self._index[v] in keep])

    def relabel(self, mapping: Mapping[Label, Label]) -> "SimpleGraph":
        return SimpleGraph((mapping[v] for v in self.vertices), ((mapping[u], mapping[v]) for u, v in self.edges()))

    # -- kernel views ----------------------------------------------------

    def csr(self) -> Tuple[array, array]:
        if "csr" not in self._cache:
            indptr = array("i", [0])
            indices = array("i")
            for nbrs in self._adj:
                indices.extend(sorted(nbrs))
                indptr.append(len(indices))
            self._cache["csr"] = (indptr, indices)
        return self._cache["csr"]

    def adjacency_bytes(self) -> bytes:
        if "adj" not in self._cache:
            n = len(self)
            buf = bytearray(n * n)
            for i, nbrs in enumerate(self._adj):
                for j in nbrs:
                    buf[i * n + j] = 1
            self._cache["adj"] = bytes(buf)
        return self._cache["adj"]

    def distance_matrix(self) -> array:
        if "dist" not in self._cache:
            indptr, indices = self.csr()
            self._cache["dist"] = kernels.distance_matrix(len(self), indptr, indices)
        return self._cache["dist"]

    def component_labels(self) -> array:
        if "comp" not in self._cache:
            indptr, indices = self.csr()
            self._cache["comp"] = kernels.component_labels(len(self), indptr, indices)
        return self._cache["comp"]


@dataclass(frozen=True)
class Embedding:
    """Injective map from pattern labels to host labels."""

    mapping: Dict[Label, Label]
    induced: bool = False

    def image(self) -> Tuple[Label, ...]:
        return tuple(self.mapping.values())


# -- constructors ----------------------------------------------------------


def empty_graph(n: int) -> SimpleGraph:
    return SimpleGraph(range(n))


def complete_graph(n: int) -> SimpleGraph:
    return SimpleGraph(range(n), combinations(range(n), 2))


def cycle_graph(n: int) -> SimpleGraph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return SimpleGraph(range(n), ((i, (i + 1) % n) for i in range(n)))


def path_graph(n: int) -> SimpleGraph:
    return SimpleGraph(range(n), ((i, i + 1) for i in range(n - 1)))


def complete_bipartite(left: Sequence[Label], right: Sequence[Label]) -> SimpleGraph:
    return SimpleGraph(list(left) + list(right), ((u, v) for u in left for v in right))


def disjoint_union(*graphs: SimpleGraph) -> SimpleGraph:
    """Disjoint union; vertex ``v`` of the ``i``-th graph becomes ``(i, v)``."""
    vertices, edges = [], []
    for i, g in enumerate(graphs):
        vertices.extend((i, v) for v in g.vertices)
        edges.extend(((i, u), (i, v)) for u, v in g.edges())
    return SimpleGraph(vertices, edges)


# -- connectivity and distances --------------------------------------------


def components(g: SimpleGraph) -> List[FrozenSet[Label]]:
    """Connected components as vertex sets, ordered by their first vertex."""
    blocks: Dict[int, List[Label]] = {}
    for v, lab in zip(g.vertices, g.component_labels()):
        blocks.setdefault(lab, []).append(v)
    return [frozenset(b) for b in blocks.values()]


def is_connected(g: SimpleGraph) -> bool:
    return len(components(g)) <= 1


def distance(g: SimpleGraph, u: Label, v: Label) -> Optional[int]:
    """Shortest-path length, or None if ``u`` and ``v`` lie in different components."""
    i, j = g.index(u), g.index(v)
    d = g.distance_matrix()[i * len(g) + j]
    return None if d < 0 else d


def diameter(g: SimpleGraph) -> Optional[int]:
    """Largest distance between two vertices of the same component.

    None only for the graph with no vertices; edgeless graphs give 0.
    """
    if len(g) == 0:
        return None
    return max(g.distance_matrix())


def is_bipartite(g: SimpleGraph) -> bool:
    dist = g.distance_matrix()
    labels = g.component_labels()
    n = len(g)
    for i, nbrs in enumerate(g._adj):
        root = labels[i]
        for j in nbrs:
            if dist[root * n + i] % 2 == dist[root * n + j] % 2:
                return False
    return True


def is_forest(g: SimpleGraph) -> bool:
    return g.number_of_edges() == len(g) - len(components(g))


# -- cycles ----------------------------------------------------------------


def girth(g: SimpleGraph) -> Optional[int]:
    """Length of a shortest cycle, None for forests."""
    if is_forest(g):
        return None
    indptr, indices = g.csr()
    return kernels.shortest_cycle(len(g), indptr, indices) or None


def girth_gt4(g: SimpleGraph) -> Optional[int]:
    """Length of a shortest cycle with more than four vertices, or None."""
    if is_forest(g):
        return None
    indptr, indices = g.csr()
    if is_bipartite(g):
        start, step = 6, 2
    else:
        start, step = 5, 1
    found = kernels.shortest_cycle_at_least(len(g), indptr, indices, g.distance_matrix(), start, step)
    return found or None


def classify_component(g: SimpleGraph, block: Iterable[Label]) -> str:
    """Shape of one component: ``"Path"``, ``"Cycle4"`` or ``"Other"``."""
    sub = g.subgraph(block)
    n, m = len(sub), sub.number_of_edges()
    if not is_connected(sub):
        raise ValueError("block is not a connected component")
    degs = sub.degrees()
    if m == n - 1 and max(degs, default=0) <= 2:
        return "Path"
    if n == 4 and m == 4 and all(d == 2 for d in degs):
        return "Cycle4"
    return "Other"


# -- subgraph search -------------------------------------------------------


def _search_order(pattern: SimpleGraph) -> List[int]:
    # Greedy: always extend with the vertex most tied to those already placed,
    # breaking ties by larger degree, then by index.
    degs = pattern.degrees()
    remaining = set(range(len(pattern)))
    order: List[int] = []
    links = [0] * len(pattern)
    while remaining:
        u = min(remaining, key=lambda i: (-links[i], -degs[i], i))
        order.append(u)
        remaining.discard(u)
        for w in pattern._adj[u]:
            links[w] += 1
    return order


def find_subgraph(
    host: SimpleGraph,
    pattern: SimpleGraph,
    induced: bool = False,
    domains: Optional[Mapping[Label, Iterable[Label]]] = None,
) -> Optional[Embedding]:
    """First embedding of ``pattern`` into ``host`` found by backtracking.

    ``domains`` optionally restricts where individual pattern vertices may
    land. With ``induced`` set, non-edges of the pattern must map to
    non-edges of the host.
    """
    pn, hn = len(pattern), len(host)
    if pn > hn or pattern.number_of_edges() > host.number_of_edges():
        return None
    pdeg, hdeg = pattern.degrees(), host.degrees()
    dom = bytearray(pn * hn)
    for u in range(pn):
        if domains is not None and pattern.vertices[u] in domains:
            allowed = [host.index(h) for h in domains[pattern.vertices[u]]]
        else:
            allowed = range(hn)
        for h in allowed:
            if hdeg[h] >= pdeg[u]:
                dom[u * hn + h] = 1
    return _run_search(host, pattern, dom, induced)


def _run_search(host: SimpleGraph, pattern: SimpleGraph, dom: bytearray, induced: bool) -> Optional[Embedding]:
    order = array("i", _search_order(pattern))
    image = kernels.find_embedding(
        len(pattern),
        pattern.adjacency_bytes(),
        order,
        len(host),
        host.adjacency_bytes(),
        bytes(dom),
        induced,
    )
    if image is None:
        return None
    return Embedding({pattern.vertices[u]: host.vertices[h] for u, h in enumerate(image)}, induced)


def is_embedding(host: SimpleGraph, pattern: SimpleGraph, emb: Embedding) -> bool:
    """Check the embedding invariants directly (used as a test oracle)."""
    m = emb.mapping
    if set(m) != set(pattern.vertices) or len(set(m.values())) != len(m):
        return False
    if any(v not in host for v in m.values()):
        return False
    for u, v in combinations(pattern.vertices, 2):
        if pattern.has_edge(u, v):
            if not host.has_edge(m[u], m[v]):
                return False
        elif emb.induced and host.has_edge(m[u], m[v]):
            return False
    return True


def isomorphic(g: SimpleGraph, h: SimpleGraph) -> bool:
    """Exact isomorphism test by induced backtracking with degree pruning."""
    if len(g) != len(h) or g.number_of_edges() != h.number_of_edges():
        return False
    gdeg, hdeg = g.degrees(), h.degrees()
    if sorted(gdeg) != sorted(hdeg):
        return False
    n = len(g)
    dom = bytearray(n * n)
    for u in range(n):
        for v in range(n):
            if gdeg[u] == hdeg[v]:
                dom[u * n + v] = 1
    return _run_search(h, g, dom, True) is not None


# -- cliques ---------------------------------------------------------------


def has_clique(g: SimpleGraph, k: int) -> Optional[FrozenSet[Label]]:
    """Some set of ``k`` pairwise adjacent vertices, or None."""
    if k < 1:
        raise ValueError("k must be at least 1")
    for clique in cliques(g, k):
        return frozenset(clique)
    return None


def cliques(g: SimpleGraph, k: int) -> Iterator[Tuple[Label, ...]]:
    """All ``k``-cliques, each once, as tuples in vertex order."""
    adj = g._adj

    def extend(chosen: List[int], cand: List[int]) -> Iterator[Tuple[Label, ...]]:
        if len(chosen) == k:
            yield tuple(g.vertices[i] for i in chosen)
            return
        for pos, v in enumerate(cand):
            if len(chosen) + len(cand) - pos < k:
                return
            yield from extend(chosen + [v], [w for w in cand[pos + 1 :] if w in adj[v]])

    yield from extend([], list(range(len(g))))


# -- export ----------------------------------------------------------------


def label_str(v: Label) -> str:
    """Render a label; tagged ``(tag, value)`` pairs become ``tag:value``."""
    if isinstance(v, tuple) and len(v) == 2 and isinstance(v[0], str):
        return f"{v[0]}:{v[1]}"
    return str(v)


def to_dot(g: SimpleGraph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    lines.extend(f'  "{label_str(v)}";' for v in g.vertices)
    lines.extend(f'  "{label_str(u)}" -- "{label_str(v)}";' for u, v in g.edges())
    lines.append("}")
    return "\n".join(lines) + "\n"
