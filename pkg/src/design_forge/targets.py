"""Canonical 16-vertex target graphs and small-graph utilities.

Two graphs are decomposed by this package: the Shrikhande graph and the
line graph of K_{4,4}.  Both are 6-regular on 16 vertices with 48 edges
and share the strong regularity parameters srg(16, 6, 2, 2), yet they are
not isomorphic: the neighbourhood of a vertex induces a 6-cycle in one
and two disjoint triangles in the other.

Vertices are numbered 1..16 throughout, and every labelled 16-tuple used
elsewhere in the package indexes this numbering: position i of a tuple is
the label attached to vertex i.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations
from typing import Iterable


class TargetId(str, Enum):
    """Identifier of a canonical target graph; the value is the file token."""

    SHRIKHANDE = "shrikhande"
    LINE_K44 = "lk44"


# Edge set of the Shrikhande graph on vertices 1..16.
SHRIKHANDE_EDGES: tuple[tuple[int, int], ...] = (
    (1, 2), (1, 4), (1, 5), (1, 8), (1, 13), (1, 14), (2, 3), (2, 5),
    (2, 6), (2, 14), (2, 15), (3, 4), (3, 6), (3, 7), (3, 15), (3, 16),
    (4, 7), (4, 8), (4, 13), (4, 16), (5, 6), (5, 8), (5, 9), (5, 12),
    (6, 7), (6, 9), (6, 10), (7, 8), (7, 10), (7, 11), (8, 11), (8, 12),
    (9, 10), (9, 12), (9, 13), (9, 16), (10, 11), (10, 13), (10, 14), (11, 12),
    (11, 14), (11, 15), (12, 15), (12, 16), (13, 14), (13, 16), (14, 15), (15, 16),
)

# Edge set of the line graph of K_{4,4} on vertices 1..16.
LINE_K44_EDGES: tuple[tuple[int, int], ...] = (
    (1, 2), (1, 3), (1, 4), (1, 5), (1, 6), (1, 7), (2, 3), (2, 4),
    (2, 8), (2, 11), (2, 12), (3, 4), (3, 9), (3, 13), (3, 15), (4, 10),
    (4, 14), (4, 16), (5, 6), (5, 7), (5, 8), (5, 9), (5, 10), (6, 7),
    (6, 11), (6, 13), (6, 14), (7, 12), (7, 15), (7, 16), (8, 9), (8, 10),
    (8, 11), (8, 12), (9, 10), (9, 13), (9, 15), (10, 14), (10, 16), (11, 12),
    (11, 13), (11, 14), (12, 15), (12, 16), (13, 14), (13, 15), (14, 16), (15, 16),
)


class GraphError(ValueError):
    """A graph value violates its structural invariants."""


@dataclass(frozen=True)
class SmallGraph:
    """An undirected simple graph on vertices 1..vertex_count (at most 64).

    Stored both as a sorted edge tuple and as per-vertex adjacency bitmasks;
    the two representations are cross-checked at construction.  Bit v of
    ``adjacency[u]`` is set iff {u, v} is an edge.
    """

    vertex_count: int
    edges: tuple[tuple[int, int], ...]
    adjacency: tuple[int, ...] = field(compare=False)

    def __init__(self, vertex_count: int, edges: Iterable[tuple[int, int]]):
        if not 1 <= vertex_count <= 64:
            raise GraphError(f"vertex count {vertex_count} outside 1..64")
        canon = []
        for u, v in edges:
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (1 <= u <= vertex_count and 1 <= v <= vertex_count):
                raise GraphError(f"edge ({u},{v}) outside 1..{vertex_count}")
            canon.append((u, v) if u < v else (v, u))
        if len(set(canon)) != len(canon):
            raise GraphError("repeated edge")
        canon.sort()
        masks = [0] * (vertex_count + 1)
        for u, v in canon:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        rebuilt = sorted(
            (u, v)
            for u in range(1, vertex_count + 1)
            for v in range(u + 1, vertex_count + 1)
            if masks[u] >> v & 1
        )
        if rebuilt != canon:
            raise GraphError("edge list and adjacency masks disagree")
        object.__setattr__(self, "vertex_count", vertex_count)
        object.__setattr__(self, "edges", tuple(canon))
        object.__setattr__(self, "adjacency", tuple(masks))

    def degree(self, v: int) -> int:
        return self.adjacency[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adjacency[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return [u for u in range(1, self.vertex_count + 1) if self.adjacency[v] >> u & 1]


@dataclass(frozen=True)
class TargetGraph:
    """One of the two canonical decomposition targets.

    Construction checks 16 vertices, 48 edges, 6-regularity and the exact
    adjacency identity A^2 = 2J + 4I, which for a 6-regular graph is
    equivalent to srg(16, 6, 2, 2).
    """

    id: TargetId
    graph: SmallGraph

    def __post_init__(self) -> None:
        g = self.graph
        if g.vertex_count != 16 or len(g.edges) != 48:
            raise GraphError("target graph must have 16 vertices and 48 edges")
        if any(g.degree(v) != 6 for v in range(1, 17)):
            raise GraphError("target graph must be 6-regular")
        if not _adjacency_identity_holds(g):
            raise GraphError("A^2 = 2J + 4I fails")

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return self.graph.edges


def _adjacency_identity_holds(g: SmallGraph) -> bool:
    # (A^2)[u][v] counts common neighbours; must be 2 off-diagonal (J term)
    # and 6 on the diagonal (2 + 4, degree row).
    n = g.vertex_count
    for u in range(1, n + 1):
        for v in range(u, n + 1):
            common = (g.adjacency[u] & g.adjacency[v]).bit_count()
            if common != (6 if u == v else 2):
                return False
    return True


def shrikhande() -> TargetGraph:
    """The Shrikhande graph with its fixed vertex numbering."""
    return _TARGETS[TargetId.SHRIKHANDE]


def line_k44() -> TargetGraph:
    """The line graph of K_{4,4} with its fixed vertex numbering."""
    return _TARGETS[TargetId.LINE_K44]


def target_graph(target: TargetId) -> TargetGraph:
    """Look up a canonical target by id."""
    return _TARGETS[TargetId(target)]


def srg_parameters(g: SmallGraph) -> tuple[int, int, int, int] | None:
    """Return (v, k, lambda, mu) if g is strongly regular, else None.

    Requires regularity, a constant common-neighbour count lambda over
    adjacent pairs and mu over non-adjacent pairs, with at least one pair
    of each kind so both counts are determined.
    """
    n = g.vertex_count
    if n < 2:
        return None
    k = g.degree(1)
    if any(g.degree(v) != k for v in range(2, n + 1)):
        return None
    lam: int | None = None
    mu: int | None = None
    for u in range(1, n + 1):
        for v in range(u + 1, n + 1):
            common = (g.adjacency[u] & g.adjacency[v]).bit_count()
            if g.has_edge(u, v):
                if lam is None:
                    lam = common
                elif lam != common:
                    return None
            else:
                if mu is None:
                    mu = common
                elif mu != common:
                    return None
    if lam is None or mu is None:
        return None
    return (n, k, lam, mu)


def is_isomorphic(g: SmallGraph, h: SmallGraph) -> dict[int, int] | None:
    """Find a vertex bijection f with {u,v} in E(g) iff {f(u),f(v)} in E(h).

    Plain backtracking over candidate images, pruned by degree and by the
    multiset of neighbour degrees, mapping next the vertex with the most
    already-mapped neighbours.  Returns the bijection as a dict on vertices
    of g, or None when no isomorphism exists.
    """
    n = g.vertex_count
    if n != h.vertex_count or len(g.edges) != len(h.edges):
        return None

    def signature(gr: SmallGraph, v: int) -> tuple:
        return (gr.degree(v), tuple(sorted(gr.degree(u) for u in gr.neighbors(v))))

    sig_h: dict[tuple, list[int]] = {}
    for w in range(1, n + 1):
        sig_h.setdefault(signature(h, w), []).append(w)
    candidates = {v: sig_h.get(signature(g, v), []) for v in range(1, n + 1)}
    if any(not c for c in candidates.values()):
        return None

    g_nb = {v: g.neighbors(v) for v in range(1, n + 1)}
    mapping: dict[int, int] = {}
    used_h = 0

    def pick_next() -> int:
        best, best_key = 0, None
        for v in range(1, n + 1):
            if v in mapping:
                continue
            mapped_nb = sum(1 for u in g_nb[v] if u in mapping)
            key = (-mapped_nb, len(candidates[v]), v)
            if best_key is None or key < best_key:
                best, best_key = v, key
        return best

    def extend() -> bool:
        nonlocal used_h
        if len(mapping) == n:
            return True
        v = pick_next()
        # image of v must be adjacent in h to exactly the images of v's
        # mapped neighbours, among all mapped images
        need = 0
        for u in g_nb[v]:
            if u in mapping:
                need |= 1 << mapping[u]
        for w in candidates[v]:
            if used_h >> w & 1:
                continue
            if h.adjacency[w] & used_h != need:
                continue
            mapping[v] = w
            used_h |= 1 << w
            if extend():
                return True
            del mapping[v]
            used_h &= ~(1 << w)
        return False

    if extend():
        return dict(mapping)
    return None


def induced_subgraph(g: SmallGraph, vertices: Iterable[int]) -> SmallGraph:
    """Subgraph induced on the given vertices, relabelled 1..k in sorted order."""
    vs = sorted(set(vertices))
    index = {v: i + 1 for i, v in enumerate(vs)}
    edges = [
        (index[u], index[v]) for u, v in combinations(vs, 2) if g.has_edge(u, v)
    ]
    return SmallGraph(len(vs), edges)


def graph_from_edges(edges: Iterable[tuple[int, int]]) -> SmallGraph:
    """Build a SmallGraph from edges over arbitrary integer points.

    The support is relabelled 1..k in sorted point order.
    """
    es = [(u, v) if u < v else (v, u) for u, v in edges]
    support = sorted({p for e in es for p in e})
    index = {p: i + 1 for i, p in enumerate(support)}
    return SmallGraph(len(support), [(index[u], index[v]) for u, v in es])


def format_edge_list(g: SmallGraph) -> str:
    """Serialize to the fixture format: `graph <n>` then one `u v` line per edge."""
    lines = [f"graph {g.vertex_count}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> SmallGraph:
    """Parse the fixture edge-list format produced by format_edge_list."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("graph "):
        raise GraphError("missing 'graph <vertex_count>' header")
    n = int(lines[0].split()[1])
    edges = []
    for ln in lines[1:]:
        u, v = map(int, ln.split())
        edges.append((u, v))
    return SmallGraph(n, edges)


_TARGETS: dict[TargetId, TargetGraph] = {
    TargetId.SHRIKHANDE: TargetGraph(
        TargetId.SHRIKHANDE, SmallGraph(16, SHRIKHANDE_EDGES)
    ),
    TargetId.LINE_K44: TargetGraph(TargetId.LINE_K44, SmallGraph(16, LINE_K44_EDGES)),
}
