"""Cross-method invariant suite run by ``apollonian verify``."""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable

import mpmath

from . import counting, graph, oracle
from .errors import ApollonianError


@dataclass(frozen=True)
class Bounds:
    structure: int = 6
    kirchhoff: int = 4
    classify: int = 2
    forests: int = 3
    census: int = 12
    growth: int = 10
    entropy: int = 20

    @classmethod
    def up_to(cls, n: int) -> "Bounds":
        """Cap every family at ``n``; oracle families also stay within their size guards."""
        graph.check_step(n)
        d = cls()
        return cls(
            structure=min(n, d.structure),
            kirchhoff=min(n, d.kirchhoff),
            classify=min(n, d.classify),
            forests=min(n, d.forests),
            census=n,
            growth=n,
            entropy=n,
        )


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str
    seconds: float


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise AssertionError(message)


def check_structure(b: Bounds) -> str:
    for n in range(b.structure + 1):
        g = graph.build_iterative(n)
        v, e = graph.order_size(n)
        _require((g.num_vertices, len(g.edges)) == (v, e), f"A({n}) order/size mismatch")
        _require(len(g.edges) == 3 * g.num_vertices - 6, f"A({n}) violates E = 3V - 6")
        for t in range(1, n + 1):
            _require(len(g.vertices_born_at(t)) == 3 ** (t - 1), f"A({n}): wrong number of step-{t} vertices")
    return f"n = 0..{b.structure}"


def check_creation_degree(b: Bounds) -> str:
    for t in range(1, b.structure + 1):
        g = graph.build_iterative(t)
        bad = [v for v in g.vertices_born_at(t) if g.degree(v) != 3]
        _require(not bad, f"A({t}): vertices {bad[:5]} born at step {t} do not have degree 3")
    return f"t = 1..{b.structure}"


def check_merged_vs_iterative(b: Bounds) -> str:
    for n in range(1, b.structure + 1):
        gi, gm = graph.build_iterative(n), graph.build_merged(n)
        _require(gi.num_vertices == gm.num_vertices and len(gi.edges) == len(gm.edges), f"n={n}: order/size")
        _require(gi.degree_sequence() == gm.degree_sequence(), f"n={n}: degree multiset")
        _require(gi.triangle_count() == gm.triangle_count(), f"n={n}: triangle count")
        if n <= b.kirchhoff:
            _require(oracle.tree_count_kirchhoff(gi) == oracle.tree_count_kirchhoff(gm), f"n={n}: tree count")
    return f"n = 1..{b.structure} (tree count n <= {b.kirchhoff})"


def check_census_vs_closed(b: Bounds) -> str:
    for c in counting.census_chain(b.census):
        n = c.n
        _require(c.a == counting.closed_a(n), f"a_{n}")
        _require(c.b == counting.closed_b(n), f"b_{n}")
        _require(c.c == counting.closed_c(n), f"c_{n}")
        _require(c.s == counting.closed_s(n).expand(threshold=b.census), f"s_{n}")
    return f"n = 0..{b.census}"


def check_identities(b: Bounds) -> str:
    chain = list(counting.census_chain(b.census + 1))
    for n in range(b.census + 1):
        a, bb, c, s = chain[n].a, chain[n].b, chain[n].c, chain[n].s
        _require(a * c == 3 * bb * bb, f"a*c != 3b^2 at n={n}")
        _require(s == c + 6 * bb + 3 * a, f"s != c + 6b + 3a at n={n}")
        a_next = chain[n + 1].a
        if n == 0:
            _require(a_next == 3 * a**3, "a_1 != 3 a_0^3")
        else:
            _require(3 ** (n - 1) * a_next == 5**n * a**3, f"3^(n-1) a_(n+1) != 5^n a_n^3 at n={n}")
    return f"n = 0..{b.census}"


def check_integrality(b: Bounds) -> str:
    for n in range(b.census + 1):
        _require((3**n + 5**n) % 2 == 0 and (5**n - 3**n) % 2 == 0, f"parity at n={n}")
        if n >= 1:
            _require((3**n - 2 * (n - 1) - 3) % 4 == 0, f"exponent of 5 at n={n}")
            _require(3 * (3 ** (n - 1) - 2 * (n - 1) - 1) % 4 == 0, f"exponent of 3 at n={n}")
    return f"n = 0..{b.census}"


def check_growth(b: Bounds) -> str:
    chain = list(counting.census_chain(b.growth + 1))
    for n in range(1, b.growth + 1):
        s, s_next, a = chain[n].s, chain[n + 1].s, chain[n].a
        _require(s_next >= 16 * a**3, f"s_{n + 1} < 16 a_{n}^3")
        _require(s_next > s, f"s_{n + 1} <= s_{n}")
    return f"n = 1..{b.growth}"


def check_kirchhoff(b: Bounds) -> str:
    for n in range(b.kirchhoff + 1):
        k = oracle.tree_count_kirchhoff(graph.build_iterative(n))
        _require(k == counting.closed_s(n).expand(), f"Kirchhoff count differs at n={n}")
        _require(k == counting.spanning_tree_count(n, "recursion"), f"recursion differs at n={n}")
    return f"n = 0..{b.kirchhoff}"


def check_classification(b: Bounds) -> str:
    for n in range(b.classify + 1):
        cc = oracle.classify_exhaustive(graph.build_iterative(n))
        cen = counting.census(n)
        _require((cc.a, cc.b, cc.c, cc.s) == (cen.a, cen.b, cen.c, cen.s), f"classification differs at n={n}")
        cc.check_bijections()
    return f"n = 0..{b.classify}"


def check_forest_oracles(b: Bounds) -> str:
    for n in range(b.forests + 1):
        g = graph.build_iterative(n)
        _require(oracle.rooted_forest_count(g, g.hubs) == counting.closed_a(n), f"a_{n} forest count")
        two_root = oracle.rooted_forest_count(g.without_hub_edges(), g.hubs[:2])
        _require(two_root == 2 * counting.closed_b(n), f"2 b_{n} forest count")
        _require(oracle.c_count_oracle(n) == counting.closed_c(n), f"c_{n} oracle")
    return f"n = 0..{b.forests}"


def check_entropy(b: Bounds) -> str:
    rows = counting.entropy_table(b.entropy, precision_digits=20)
    limit = counting.entropy_limit(20)
    _require(mpmath.nstr(limit, 5) == "1.354", "ln(15)/2 does not round to 1.3540")
    if b.entropy >= 10:
        _require(abs(rows[10].z - limit) < mpmath.mpf("1e-3"), "|z_10 - ln(15)/2| >= 1e-3")
    residuals = [abs(r.z - limit) for r in rows]
    for n in range(8, min(b.entropy, 12) + 1):
        _require(residuals[n] < residuals[n - 1], f"residual does not decrease at n={n}")
    return f"n = 0..{b.entropy}"


CHECKS: list[tuple[str, Callable[[Bounds], str]]] = [
    ("structure: V_n, E_n, E = 3V - 6, birth-step counts", check_structure),
    ("structure: new vertices have degree 3 at creation", check_creation_degree),
    ("structure: merged and iterative constructions agree", check_merged_vs_iterative),
    ("census: recursion equals closed forms", check_census_vs_closed),
    ("census: a c = 3 b^2, s = c + 6b + 3a, a-step identity", check_identities),
    ("census: parity and exponent integrality", check_integrality),
    ("census: growth s_(n+1) >= 16 a_n^3 and s_(n+1) > s_n", check_growth),
    ("oracle: Kirchhoff determinant equals s_n", check_kirchhoff),
    ("oracle: exhaustive classification and hub-edge bijections", check_classification),
    ("oracle: rooted-forest and hub-edge-free tree determinants", check_forest_oracles),
    ("entropy: two z_n routes agree, convergence to ln(15)/2", check_entropy),
]


def run_checks(bounds: Bounds | None = None) -> list[CheckResult]:
    bounds = bounds or Bounds()
    results = []
    for name, fn in CHECKS:
        start = time.perf_counter()
        try:
            detail = fn(bounds)
            ok = True
        except (AssertionError, ApollonianError) as exc:
            detail, ok = str(exc), False
        results.append(CheckResult(name, ok, detail, time.perf_counter() - start))
    return results
