"""Link (star) graph of a presentation and a conservative weight test.

Link nodes are the signed generator ends ``(x, +1)`` and ``(x, -1)``.  The
corner of relator ``r`` at position ``p`` sits between the letters
``u = r[p]`` and ``v = r[p + 1]`` (indices cyclic) and becomes the link edge
joining ``end(u^-1)`` to ``end(v)``, where ``end(y^e) = (y, e)``.  For
``a b a^-1 b^-1`` this gives the edges ``a- b+``, ``b- a-``, ``a+ b-``,
``b+ a+`` forming one 4-cycle.

The weight test here looks for weights ``w(c) >= 0`` on corners such that
every relator ``d`` has corner sum at most ``|d| - 2`` and every simple
cycle of the link graph weighs at least 2.  Non-negativity means a closed
walk always weighs at least as much as some simple cycle inside it, so a
pass also satisfies the usual all-cycles form of the test.
"""

from __future__ import annotations

import heapq
import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, NamedTuple, Sequence

import networkx as nx

from ..wlog import Presentation
from ..words import Word, is_cyclically_reduced
from .simplex import check_farkas, farkas_certificate, feasible_point

__all__ = [
    "Corner",
    "LinkEdge",
    "LinkGraph",
    "WeightTestResult",
    "build_link_graph",
    "constraint_system",
    "min_weight_cycle",
    "violated_cycles",
    "simple_cycles",
    "weight_test",
    "verify_weights",
]

PASS, FAIL, INCONCLUSIVE = "pass", "fail", "inconclusive"


class Corner(NamedTuple):
    """Corner ``position`` of cell ``relator`` (a relator or a diagram face)."""

    relator: int
    position: int


Node = tuple[str, int]


class LinkEdge(NamedTuple):
    corner: Corner
    u: Node
    v: Node


@dataclass(frozen=True)
class LinkGraph:
    nodes: tuple[Node, ...]
    edges: tuple[LinkEdge, ...]

    def multigraph(self) -> nx.MultiGraph:
        G = nx.MultiGraph()
        G.add_nodes_from(self.nodes)
        for i, e in enumerate(self.edges):
            G.add_edge(e.u, e.v, key=i)
        return G


def build_link_graph(p: Presentation) -> LinkGraph:
    nodes = tuple((g, s) for g in p.generators for s in (1, -1))
    edges = []
    for ri, r in enumerate(p.relators):
        if not r or not is_cyclically_reduced(r):
            raise ValueError(f"relator {ri} must be non-empty and cyclically reduced")
        n = len(r)
        for pos in range(n):
            u, v = r[pos], r[(pos + 1) % n]
            edges.append(LinkEdge(Corner(ri, pos), (u.gen, -u.sign), (v.gen, v.sign)))
    return LinkGraph(nodes, tuple(edges))


def _dijkstra(adj, weights, src, dst, banned):
    dist = {src: Fraction(0)}
    prev: dict = {}
    tie = itertools.count()
    heap = [(Fraction(0), next(tie), src)]
    done = set()
    while heap:
        d, _, x = heapq.heappop(heap)
        if x in done:
            continue
        if x == dst:
            break
        done.add(x)
        for y, ei in adj[x]:
            if ei == banned:
                continue
            nd = d + weights[ei]
            if y not in dist or nd < dist[y]:
                dist[y] = nd
                prev[y] = (x, ei)
                heapq.heappush(heap, (nd, next(tie), y))
    if dst not in dist:
        return None
    path = []
    x = dst
    while x != src:
        x, ei = prev[x]
        path.append(ei)
    return dist[dst], path[::-1]


def _edge_cycles(link: LinkGraph, weights: Sequence[Fraction]):
    """For each edge, the lightest simple cycle through it."""
    adj: dict = {n: [] for n in link.nodes}
    for i, e in enumerate(link.edges):
        adj[e.u].append((e.v, i))
        if e.u != e.v:
            adj[e.v].append((e.u, i))
    for i, e in enumerate(link.edges):
        if e.u == e.v:
            yield weights[i], [i]
            continue
        found = _dijkstra(adj, weights, e.v, e.u, banned=i)
        if found is not None:
            yield weights[i] + found[0], [i] + found[1]


def min_weight_cycle(link: LinkGraph, weights: Sequence[Fraction]) -> tuple[Fraction, list[int]] | None:
    """Lightest simple cycle under non-negative edge weights, as edge indices.

    Every cycle is an edge ``e = uv`` closed up by a path from ``v`` back to
    ``u`` avoiding ``e``; loops are cycles of length one.
    """
    return min(_edge_cycles(link, weights), key=lambda c: c[0], default=None)


def violated_cycles(link: LinkGraph, weights: Sequence[Fraction], bound=2) -> list[list[int]]:
    """Distinct per-edge lightest cycles weighing less than ``bound``."""
    out, seen = [], set()
    for wt, z in _edge_cycles(link, weights):
        key = frozenset(z)
        if wt < bound and key not in seen:
            seen.add(key)
            out.append(z)
    return out


def simple_cycles(link: LinkGraph, cap: int | None = None) -> list[list[int]] | None:
    """All simple cycles as edge-index lists; None once more than ``cap`` turn up.

    Node cycles from networkx are expanded over parallel edges; a 2-cycle
    is a pair of distinct parallel edges.
    """
    G = nx.MultiGraph()
    G.add_nodes_from(link.nodes)
    between: dict = {}
    for i, e in enumerate(link.edges):
        between.setdefault(frozenset((e.u, e.v)), []).append(i)
        G.add_edge(e.u, e.v)
    cycles: list[list[int]] = []
    for nodes in nx.simple_cycles(G):
        if len(nodes) == 1:
            expanded = [[i] for i in between[frozenset(nodes)]]
        elif len(nodes) == 2:
            expanded = [list(c) for c in itertools.combinations(between[frozenset(nodes)], 2)]
        else:
            hops = [between[frozenset((a, b))] for a, b in zip(nodes, nodes[1:] + nodes[:1])]
            expanded = [list(c) for c in itertools.product(*hops)]
        cycles.extend(expanded)
        if cap is not None and len(cycles) > cap:
            return None
    return cycles


@dataclass
class WeightTestResult:
    status: str
    weights: dict[Corner, Fraction] | None = None
    cycles: list[list[Corner]] = field(default_factory=list)
    multipliers: list[Fraction] | None = None
    reason: str | None = None

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def to_json(self) -> dict:
        out: dict = {"status": self.status, "reason": self.reason}
        if self.weights is not None:
            out["weights"] = [
                {"relator": c.relator, "position": c.position, "weight": str(w)}
                for c, w in sorted(self.weights.items())
            ]
        out["cycles"] = [[[c.relator, c.position] for c in z] for z in self.cycles]
        if self.multipliers is not None:
            out["multipliers"] = [str(y) for y in self.multipliers]
        return out


def constraint_system(p: Presentation, link: LinkGraph, cycles: Sequence[Sequence[int]]):
    """Rows ``A x <= b``: one face row per relator, then ``-sum <= -2`` per cycle.

    Columns follow ``link.edges``; cycles are lists of edge indices.
    """
    n = len(link.edges)
    A, b = [], []
    col = 0
    for r in p.relators:
        row = [0] * n
        for k in range(col, col + len(r)):
            row[k] = 1
        col += len(r)
        A.append(row)
        b.append(len(r) - 2)
    for z in cycles:
        row = [0] * n
        for i in z:
            row[i] -= 1
        A.append(row)
        b.append(-2)
    return A, b


def _fail(p, link, cycles, reason):
    A, b = constraint_system(p, link, cycles)
    y = farkas_certificate(A, b)
    assert y is not None and check_farkas(A, b, y)
    return WeightTestResult(
        FAIL,
        cycles=[[link.edges[i].corner for i in z] for z in cycles],
        multipliers=y,
        reason=reason,
    )


def weight_test(p: Presentation, cycle_cap: int = 100_000, method: str = "separation") -> WeightTestResult:
    """Decide the conservative weight system exactly.

    ``method="enumerate"`` lists every simple cycle up front, is
    inconclusive past ``cycle_cap`` cycles and suits small link graphs;
    listed cycles enter the LP only once violated.  ``method="separation"`` adds,
    each round, the lightest violated cycle through every link edge and is
    inconclusive once more than ``cycle_cap`` cycle rows are needed.  A
    fail carries Farkas multipliers for the
    relator rows followed by the listed cycle rows.
    """
    link = build_link_graph(p)
    n = len(link.edges)
    if method == "enumerate":
        cycles = simple_cycles(link, cycle_cap)
        if cycles is None:
            return WeightTestResult(INCONCLUSIVE, reason=f"more than {cycle_cap} simple cycles")
        # Rows enter only once the current point violates them, at most the
        # lightest violated listed cycle through each edge per round.
        active: list[list[int]] = []
        pending = dict(enumerate(cycles))
        while True:
            A, b = constraint_system(p, link, active)
            x = feasible_point(A, b, nvars=n)
            if x is None:
                return _fail(p, link, active, "no non-negative weights satisfy the system")
            # integer arithmetic over a common denominator
            den = math.lcm(*(v.denominator for v in x)) if x else 1
            xi = [v.numerator * (den // v.denominator) for v in x]
            best: dict[int, tuple[int, int]] = {}
            for ci, z in pending.items():
                wt = sum(xi[i] for i in z)
                if wt < 2 * den:
                    for i in z:
                        if i not in best or wt < best[i][0]:
                            best[i] = (wt, ci)
            if not best:
                weights = {e.corner: x[i] for i, e in enumerate(link.edges)}
                return WeightTestResult(PASS, weights=weights, cycles=[])
            for ci in sorted({ci for _, ci in best.values()}):
                active.append(pending.pop(ci))
    if method != "separation":
        raise ValueError(f"unknown method {method!r}")

    cycles: list[list[int]] = []
    seen: set[frozenset] = set()
    for _ in range(cycle_cap + 1):
        A, b = constraint_system(p, link, cycles)
        x = feasible_point(A, b, nvars=n)
        if x is None:
            return _fail(p, link, cycles, "no non-negative weights satisfy the system")
        fresh = violated_cycles(link, x)
        if not fresh:
            weights = {e.corner: x[i] for i, e in enumerate(link.edges)}
            return WeightTestResult(
                PASS, weights=weights, cycles=[[link.edges[i].corner for i in z] for z in cycles]
            )
        for z in fresh:
            # a cycle already in the system cannot be violated by a feasible point
            assert frozenset(z) not in seen
            seen.add(frozenset(z))
            cycles.append(z)
        if len(cycles) > cycle_cap:
            break
    return WeightTestResult(INCONCLUSIVE, reason=f"more than {cycle_cap} cycle constraints needed")


def verify_weights(p: Presentation, weights: Mapping[Corner, Fraction]) -> bool:
    """Exact re-check of a weight assignment against every constraint."""
    link = build_link_graph(p)
    try:
        x = [Fraction(weights[e.corner]) for e in link.edges]
    except KeyError:
        return False
    if any(v < 0 for v in x):
        return False
    col = 0
    for r in p.relators:
        if sum(x[col : col + len(r)]) > len(r) - 2:
            return False
        col += len(r)
    found = min_weight_cycle(link, x)
    return found is None or found[0] >= 2
