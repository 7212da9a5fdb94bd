"""Construction and serialization of Apollonian networks A(n).

Two independent builders are provided:

* :func:`build_iterative` inserts one vertex into every triangle created at the
  previous step, starting from a triangle.
* :func:`build_merged` glues three copies of A(n-1) along their hub edges.

Vertices are dense integers.  The hubs of every graph are 0, 1, 2.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import SizeGuardError

MAX_BUILD_STEP = 16
EXPORT_FORMATS = ("edge-list", "dot", "json")

Edge = tuple[int, int]


def check_step(n: int) -> int:
    """Validate a construction step index and return it as an ``int``."""
    if isinstance(n, bool) or not isinstance(n, int):
        raise TypeError(f"step index must be an integer, got {n!r}")
    if n < 0:
        raise ValueError(f"step index must be non-negative, got {n}")
    return n


def _edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


def order_size(n: int) -> tuple[int, int]:
    """Return ``(V_n, E_n)`` for A(n) from the closed formulas."""
    check_step(n)
    p = 3**n
    return (p + 5) // 2, 3 * (p + 1) // 2


@dataclass(frozen=True)
class Graph:
    """A simple undirected graph on vertices ``0 .. num_vertices-1``.

    ``edges`` holds each edge once as ``(min, max)``.  ``hubs`` names the
    distinguished vertices; for a bare :class:`Graph` they carry no structural
    promise beyond being valid vertex ids.
    """

    num_vertices: int
    edges: frozenset[Edge]
    hubs: tuple[int, int, int]

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        nbrs: list[set[int]] = [set() for _ in range(self.num_vertices)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return tuple(frozenset(s) for s in nbrs)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degree_sequence(self) -> list[int]:
        return sorted(len(s) for s in self.adjacency)

    def triangle_count(self) -> int:
        adj = self.adjacency
        return sum(len(adj[u] & adj[v]) for u, v in self.edges) // 3

    def is_connected(self) -> bool:
        if self.num_vertices == 0:
            return True
        seen = {0}
        stack = [0]
        while stack:
            u = stack.pop()
            for w in self.adjacency[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.num_vertices

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)


@dataclass(frozen=True)
class ApollonianGraph(Graph):
    """A(n) with birth-step labels and its three hub edges.

    ``birth[v]`` is the step at which vertex ``v`` was introduced (0 for hubs).
    Structural invariants are checked on construction.
    """

    n: int = 0
    birth: tuple[int, ...] = ()
    hub_edges: tuple[Edge, Edge, Edge] = ((0, 1), (0, 2), (1, 2))

    def __post_init__(self) -> None:
        self._check()

    def _check(self) -> None:
        v_expected, e_expected = order_size(self.n)
        if self.num_vertices != v_expected or len(self.edges) != e_expected:
            raise AssertionError(
                f"A({self.n}) has {self.num_vertices} vertices / {len(self.edges)} edges, "
                f"expected {v_expected} / {e_expected}"
            )
        if len(self.edges) != 3 * self.num_vertices - 6:
            raise AssertionError("edge count is not 3V - 6")
        if len(self.birth) != self.num_vertices:
            raise AssertionError("birth labels do not cover every vertex")
        if any(u == v or not (0 <= u < v < self.num_vertices) for u, v in self.edges):
            raise AssertionError("edges must be normalized pairs of distinct valid vertices")
        h0, h1, h2 = self.hubs
        expected_hub_edges = {_edge(h0, h1), _edge(h0, h2), _edge(h1, h2)}
        if set(self.hub_edges) != expected_hub_edges or not expected_hub_edges <= self.edges:
            raise AssertionError("hub edges must join the three hubs and belong to the graph")

    def without_hub_edges(self) -> Graph:
        """Return the plain graph obtained by deleting the three hub edges."""
        return Graph(self.num_vertices, self.edges - set(self.hub_edges), self.hubs)

    def vertices_born_at(self, step: int) -> list[int]:
        return [v for v, t in enumerate(self.birth) if t == step]


def _guard(n: int) -> None:
    check_step(n)
    if n > MAX_BUILD_STEP:
        v, _ = order_size(n)
        raise SizeGuardError(
            f"refusing to build A({n}) explicitly ({v} vertices; limit is n <= {MAX_BUILD_STEP}); "
            "use the formula-only counting operations instead"
        )


def build_iterative(n: int) -> ApollonianGraph:
    """Build A(n) by repeated triangle subdivision.

    At each step every triangle created at the previous step receives a new
    vertex joined to its three corners.  Triangles are processed in
    lexicographic order of their sorted corner triples, and new vertices are
    numbered consecutively in that order, so the numbering of A(t) is a prefix
    of the numbering of A(n) for every t <= n.
    """
    _guard(n)
    edges: set[Edge] = {(0, 1), (0, 2), (1, 2)}
    birth = [0, 0, 0]
    frontier: list[tuple[int, int, int]] = [(0, 1, 2)]
    for step in range(1, n + 1):
        created: list[tuple[int, int, int]] = []
        for x, y, z in sorted(frontier):
            v = len(birth)
            birth.append(step)
            edges.update(((x, v), (y, v), (z, v)))
            created.extend(((x, y, v), (x, z, v), (y, z, v)))
        frontier = created
    return ApollonianGraph(
        num_vertices=len(birth),
        edges=frozenset(edges),
        hubs=(0, 1, 2),
        n=n,
        birth=tuple(birth),
    )


def build_merged(n: int) -> ApollonianGraph:
    """Build A(n) by gluing three copies of A(n-1).

    With outer hubs X=0, Y=1, Z=2 and centre W=3, the copies take hub
    triples (X, Y, W), (Y, Z, W) and (Z, X, W).  Each spoke edge WX, WY, WZ is
    shared by two copies; each outer edge XY, YZ, ZX belongs to one copy.
    Interior vertices of the copies follow in copy order.
    """
    _guard(n)
    if n == 0:
        return build_iterative(0)
    base = build_merged(n - 1)
    x, y, z, w = 0, 1, 2, 3
    hub_images = ((x, y, w), (y, z, w), (z, x, w))

    birth = [0, 0, 0, 1]
    edges: set[Edge] = set()
    for images in hub_images:
        relabel = dict(zip(base.hubs, images))
        for v in range(base.num_vertices):
            if v not in relabel:
                relabel[v] = len(birth)
                birth.append(base.birth[v] + 1)
        edges.update(_edge(relabel[u], relabel[v]) for u, v in base.edges)

    v_expected, e_expected = order_size(n)
    if len(birth) != v_expected or len(edges) != e_expected:
        raise AssertionError(
            f"merge wiring produced {len(birth)} vertices / {len(edges)} edges, "
            f"expected {v_expected} / {e_expected}"
        )
    return ApollonianGraph(
        num_vertices=len(birth),
        edges=frozenset(edges),
        hubs=(x, y, z),
        n=n,
        birth=tuple(birth),
    )


def degree_multiset(g: Graph) -> Counter[int]:
    return Counter(g.degree_sequence())


def _format_edges(edges: Iterable[Edge]) -> list[str]:
    return [f"{u} {v}" for u, v in sorted(edges)]


def export(g: ApollonianGraph, fmt: str) -> str:
    """Serialize ``g`` as ``edge-list``, ``dot`` or ``json`` text.

    Output is deterministic; every format ends with a newline.
    """
    if fmt == "edge-list":
        return "".join(line + "\n" for line in _format_edges(g.edges))
    if fmt == "dot":
        return _to_dot(g)
    if fmt == "json":
        return _to_json(g)
    raise ValueError(f"unknown export format {fmt!r}; choose from {', '.join(EXPORT_FORMATS)}")


def _to_dot(g: ApollonianGraph) -> str:
    hubs = set(g.hubs)
    hub_edges = set(g.hub_edges)
    lines = [f"graph A{g.n} {{"]
    for v in range(g.num_vertices):
        attrs = f'birth={g.birth[v]}'
        if v in hubs:
            attrs += ', hub=true, shape=doublecircle'
        lines.append(f"  {v} [{attrs}];")
    for u, v in g.sorted_edges():
        suffix = " [hub=true, style=bold]" if (u, v) in hub_edges else ""
        lines.append(f"  {u} -- {v}{suffix};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _to_json(g: ApollonianGraph) -> str:
    doc = {
        "n": g.n,
        "num_vertices": g.num_vertices,
        "num_edges": len(g.edges),
        "hubs": list(g.hubs),
        "hub_edges": [list(e) for e in sorted(g.hub_edges)],
        "vertices": [{"id": v, "birth_step": t} for v, t in enumerate(g.birth)],
        "edges": [list(e) for e in g.sorted_edges()],
    }
    return json.dumps(doc, indent=2) + "\n"


def graph_from_edges(num_vertices: int, edges: Sequence[Edge], hubs: tuple[int, int, int] = (0, 1, 2)) -> Graph:
    """Wrap an arbitrary edge list as a :class:`Graph` (used by the oracles and tests)."""
    return Graph(num_vertices, frozenset(_edge(u, v) for u, v in edges), hubs)
