"""Independent counting oracles built from first principles.

* Matrix-tree and all-minors determinants of Laplacian minors, evaluated by
  fraction-free (Bareiss) elimination over the integers.
* Exhaustive classification of spanning forests of small graphs by how the
  hub vertices are split and which hub edges are used.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from .errors import ConsistencyError, DisconnectedGraphError, SizeGuardError
from .graph import ApollonianGraph, Graph, build_iterative, check_step

MAX_DETERMINANT_VERTICES = 200
MAX_CLASSIFY_EDGES = 20


def bareiss_determinant(matrix: Sequence[Sequence[int]]) -> int:
    """Exact determinant of a square integer matrix.

    Every division in the elimination is exact; a nonzero remainder raises
    :class:`ConsistencyError`.  Rows are swapped when a pivot vanishes.
    """
    rows = [list(r) for r in matrix]
    size = len(rows)
    if any(len(r) != size for r in rows):
        raise ValueError("matrix must be square")
    if size == 0:
        return 1
    sign = 1
    prev_pivot = 1
    for k in range(size - 1):
        if rows[k][k] == 0:
            swap = next((i for i in range(k + 1, size) if rows[i][k] != 0), None)
            if swap is None:
                return 0
            rows[k], rows[swap] = rows[swap], rows[k]
            sign = -sign
        pivot = rows[k][k]
        row_k = rows[k]
        for i in range(k + 1, size):
            row_i = rows[i]
            lead = row_i[k]
            for j in range(k + 1, size):
                q, r = divmod(pivot * row_i[j] - lead * row_k[j], prev_pivot)
                if r:
                    raise ConsistencyError(f"Bareiss step {k} left remainder {r}")
                row_i[j] = q
            row_i[k] = 0
        prev_pivot = pivot
    return sign * rows[-1][-1]


@dataclass(frozen=True)
class LaplacianMinor:
    """Laplacian (degree minus adjacency) with some rows/columns deleted."""

    order: int
    entries: tuple[tuple[int, ...], ...]

    def determinant(self) -> int:
        return bareiss_determinant(self.entries)


def laplacian_minor(g: Graph, deleted: Iterable[int]) -> LaplacianMinor:
    deleted = set(deleted)
    if not deleted <= set(range(g.num_vertices)):
        raise ValueError(f"deleted vertices {sorted(deleted)} are not all in the graph")
    keep = [v for v in range(g.num_vertices) if v not in deleted]
    index = {v: i for i, v in enumerate(keep)}
    size = len(keep)
    rows = [[0] * size for _ in range(size)]
    for v in keep:
        rows[index[v]][index[v]] = g.degree(v)
    for u, v in g.edges:
        if u in index and v in index:
            rows[index[u]][index[v]] -= 1
            rows[index[v]][index[u]] -= 1
    return LaplacianMinor(order=size, entries=tuple(tuple(r) for r in rows))


def _size_guard(g: Graph, limit: int) -> None:
    if g.num_vertices > limit:
        raise SizeGuardError(
            f"determinant oracle limited to {limit} vertices, graph has {g.num_vertices}"
        )


def tree_count_kirchhoff(g: Graph, max_vertices: int = MAX_DETERMINANT_VERTICES) -> int:
    """Spanning-tree count as the Laplacian cofactor at hub 0."""
    _size_guard(g, max_vertices)
    det = laplacian_minor(g, [g.hubs[0]]).determinant()
    if det == 0:
        if g.is_connected():
            raise ConsistencyError("zero Laplacian cofactor for a connected graph")
        raise DisconnectedGraphError("graph is disconnected: it has no spanning tree")
    return det


def rooted_forest_count(g: Graph, roots: Iterable[int], max_vertices: int = MAX_DETERMINANT_VERTICES) -> int:
    """Spanning forests with one tree per root, each tree holding exactly one root.

    Equals the determinant of the Laplacian with every root row and column
    removed (all-minors matrix-tree theorem).
    """
    roots = set(roots)
    if not roots or not roots <= set(g.hubs):
        raise ValueError("roots must be a non-empty subset of the hub vertices")
    _size_guard(g, max_vertices)
    return laplacian_minor(g, roots).determinant()


def c_count_oracle(n: int) -> int:
    """Spanning trees of A(n) avoiding all three hub edges."""
    check_step(n)
    if n == 0:
        return 0
    return tree_count_kirchhoff(build_iterative(n).without_hub_edges())


class SubgraphClass(enum.Enum):
    A = "A"
    B = "B"
    B_PRIME = "B'"
    B_DOUBLE_PRIME = "B''"
    C = "C"
    D = "D"
    E = "E"
    F = "F"
    OTHER = "Other"


@dataclass(frozen=True)
class ClassifiedCensus:
    """Counts of each spanning-subgraph class of one graph.

    ``d``, ``e`` and ``f`` are the counts for one fixed labelling: hub edge
    (h0, h1) for D; hub edge (h0, h1) with h2 hanging off h1 for E; hub edges
    (h0, h1) and (h1, h2) for F.  The ``*_variants`` tuples hold the counts for
    every labelling (3 for D and F, 6 for E); symmetry makes them all equal.
    """

    a: int
    b: int
    b_prime: int
    b_double_prime: int
    c: int
    d: int
    e: int
    f: int
    s: int
    other: int = 0
    d_variants: tuple[int, ...] = field(default=(), compare=False)
    e_variants: tuple[int, ...] = field(default=(), compare=False)
    f_variants: tuple[int, ...] = field(default=(), compare=False)

    def check_bijections(self) -> None:
        """Raise unless |D| = |F| = a, |E| = b and b = b' = b''."""
        problems = []
        if not self.b == self.b_prime == self.b_double_prime:
            problems.append(f"b, b', b'' differ: {self.b}, {self.b_prime}, {self.b_double_prime}")
        if any(d != self.a for d in self.d_variants or (self.d,)):
            problems.append(f"|D| != a: {self.d_variants or self.d} vs {self.a}")
        if any(e != self.b for e in self.e_variants or (self.e,)):
            problems.append(f"|E| != b: {self.e_variants or self.e} vs {self.b}")
        if any(f != self.a for f in self.f_variants or (self.f,)):
            problems.append(f"|F| != a: {self.f_variants or self.f} vs {self.a}")
        if problems:
            raise ConsistencyError("; ".join(problems))

    def as_dict(self) -> dict[str, int]:
        return {
            "a": self.a, "b": self.b, "b'": self.b_prime, "b''": self.b_double_prime,
            "c": self.c, "d": self.d, "e": self.e, "f": self.f, "s": self.s,
        }


class _DisjointSets:
    __slots__ = ("parent",)

    def __init__(self, size: int) -> None:
        self.parent = list(range(size))

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, x: int, y: int) -> bool:
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return False
        self.parent[rx] = ry
        return True


def _forest_components(num_vertices: int, edges: Iterable[tuple[int, int]]) -> _DisjointSets | None:
    sets = _DisjointSets(num_vertices)
    for u, v in edges:
        if not sets.union(u, v):
            return None
    return sets


def classify_exhaustive(g: ApollonianGraph, max_edges: int = MAX_CLASSIFY_EDGES) -> ClassifiedCensus:
    """Enumerate all spanning forests with 1, 2 or 3 trees and sort them into classes.

    A forest with k trees on V vertices has exactly V - k edges, so only edge
    subsets of those three sizes are visited.
    """
    if len(g.edges) > max_edges:
        raise SizeGuardError(f"exhaustive classification limited to {max_edges} edges, graph has {len(g.edges)}")
    h0, h1, h2 = g.hubs
    hubs = (h0, h1, h2)
    e01, e02, e12 = (min(h0, h1), max(h0, h1)), (min(h0, h2), max(h0, h2)), (min(h1, h2), max(h1, h2))
    hub_edge_set = {e01, e02, e12}
    edges = g.sorted_edges()
    nv = g.num_vertices

    counts = dict.fromkeys(SubgraphClass, 0)
    d_var = dict.fromkeys((e01, e02, e12), 0)
    # E labelling: (hub edge, endpoint the third hub hangs off)
    e_var = {(e01, h1): 0, (e01, h0): 0, (e02, h2): 0, (e02, h0): 0, (e12, h2): 0, (e12, h1): 0}
    f_var = {frozenset(p): 0 for p in ((e01, e12), (e01, e02), (e02, e12))}
    s = 0

    for trees in (1, 2, 3):
        k = nv - trees
        if k < 0:
            continue
        for subset in combinations(edges, k):
            comps = _forest_components(nv, subset)
            if comps is None:
                continue
            used = [e for e in subset if e in hub_edge_set]
            roots = [comps.find(h) for h in hubs]
            if trees == 1:
                s += 1
                if not used:
                    counts[SubgraphClass.C] += 1
                elif len(used) == 1:
                    (x, y), = used
                    z = next(h for h in hubs if h not in (x, y))
                    partial = _forest_components(nv, [e for e in subset if e != (x, y)])
                    anchor = y if partial.find(z) == partial.find(y) else x
                    e_var[((x, y), anchor)] += 1
                    counts[SubgraphClass.E] += 1
                elif len(used) == 2:
                    f_var[frozenset(used)] += 1
                    counts[SubgraphClass.F] += 1
                else:
                    counts[SubgraphClass.OTHER] += 1
            elif trees == 2:
                if not used:
                    r0, r1, r2 = roots
                    if r1 == r2 != r0:
                        counts[SubgraphClass.B] += 1
                    elif r0 == r2 != r1:
                        counts[SubgraphClass.B_PRIME] += 1
                    elif r0 == r1 != r2:
                        counts[SubgraphClass.B_DOUBLE_PRIME] += 1
                    else:
                        counts[SubgraphClass.OTHER] += 1
                elif len(used) == 1:
                    (x, y), = used
                    z = next(h for h in hubs if h not in (x, y))
                    if comps.find(z) != comps.find(x):
                        d_var[(x, y)] += 1
                        counts[SubgraphClass.D] += 1
                    else:
                        counts[SubgraphClass.OTHER] += 1
                else:
                    counts[SubgraphClass.OTHER] += 1
            else:
                if len(set(roots)) == 3 and not used:
                    counts[SubgraphClass.A] += 1
                else:
                    counts[SubgraphClass.OTHER] += 1

    census = ClassifiedCensus(
        a=counts[SubgraphClass.A],
        b=counts[SubgraphClass.B],
        b_prime=counts[SubgraphClass.B_PRIME],
        b_double_prime=counts[SubgraphClass.B_DOUBLE_PRIME],
        c=counts[SubgraphClass.C],
        d=d_var[e01],
        e=e_var[(e01, h1)],
        f=f_var[frozenset((e01, e12))],
        s=s,
        other=counts[SubgraphClass.OTHER],
        d_variants=tuple(d_var.values()),
        e_variants=tuple(e_var.values()),
        f_variants=tuple(f_var.values()),
    )
    census.check_bijections()
    return census
