"""Word labeled oriented graphs and the presentations they define.

An edge ``x -> y`` labeled ``w`` encodes the relation ``x w = w y``, i.e. the
relator ``x w y^-1 w^-1``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Sequence

import networkx as nx

from .words import (
    GENERATOR_NAME,
    Letter,
    Occurrence,
    Word,
    invert,
    occurrences,
)

__all__ = [
    "WlogEdge",
    "WlogGraph",
    "WlogRelator",
    "Presentation",
    "Shape",
    "build_presentation",
    "is_injective",
    "underlying_shape",
    "subdivide",
    "decompose_relator",
    "presentation_to_graph",
]


@dataclass(frozen=True)
class WlogEdge:
    source: str
    target: str
    label: Word


@dataclass(frozen=True)
class WlogGraph:
    vertices: tuple[str, ...]
    edges: tuple[WlogEdge, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "edges", tuple(self.edges))
        seen = set()
        for v in self.vertices:
            if not GENERATOR_NAME.match(v):
                raise ValueError(f"invalid vertex name {v!r}")
            if v in seen:
                raise ValueError(f"duplicate vertex {v!r}")
            seen.add(v)
        for i, e in enumerate(self.edges):
            for end in (e.source, e.target):
                if end not in seen:
                    raise ValueError(f"edge {i}: endpoint {end!r} is not a vertex")
            if not e.label:
                raise ValueError(f"edge {i}: label must be non-empty")
            for l in e.label:
                if l.gen not in seen:
                    raise ValueError(f"edge {i}: label letter {l.gen!r} is not a vertex")

    @property
    def labels(self) -> list[Word]:
        return [e.label for e in self.edges]

    def is_log(self) -> bool:
        """True when every label is a single positive letter."""
        return all(len(e.label) == 1 and e.label[0].sign > 0 for e in self.edges)


@dataclass(frozen=True)
class WlogRelator:
    """Relator ``alpha w beta^-1 w^-1`` read off one edge."""

    alpha: str
    w: Word
    beta: str

    def __post_init__(self):
        if not self.w:
            raise ValueError("relator middle word must be non-empty")

    @property
    def s(self) -> int:
        return len(self.w)

    @property
    def word(self) -> Word:
        return Word((Letter(self.alpha, 1),)) + self.w + Word((Letter(self.beta, -1),)) + invert(self.w)

    def __len__(self) -> int:
        return 2 * self.s + 2


@dataclass(frozen=True)
class Presentation:
    generators: tuple[str, ...]
    relators: tuple[Word, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        object.__setattr__(self, "relators", tuple(self.relators))
        if len(set(self.generators)) != len(self.generators):
            raise ValueError("generator names must be unique")
        known = set(self.generators)
        for i, r in enumerate(self.relators):
            bad = r.generators - known
            if bad:
                raise ValueError(f"relator {i} uses unknown generators {sorted(bad)}")


def build_presentation(g: WlogGraph) -> tuple[Presentation, list[WlogRelator]]:
    rels = [WlogRelator(e.source, e.label, e.target) for e in g.edges]
    return Presentation(g.vertices, tuple(r.word for r in rels)), rels


class InjectivityWitness(NamedTuple):
    """Label of edge ``inner`` (or its inverse) found inside the label of ``outer``."""

    inner: int
    outer: int
    occurrence: Occurrence


def is_injective(g: WlogGraph | Sequence[Word]) -> tuple[bool, InjectivityWitness | None]:
    labels = g.labels if isinstance(g, WlogGraph) else list(g)
    for i, j in itertools.permutations(range(len(labels)), 2):
        occ = occurrences(labels[i], labels[j], cyclic=False, include_inverse=True, relator=j)
        if occ:
            return False, InjectivityWitness(i, j, occ[0])
    return True, None


class Shape(NamedTuple):
    kind: str  # "tree", "circle" or "other"
    cycle_rank: int
    components: int


def _multigraph(g: WlogGraph) -> nx.MultiGraph:
    G = nx.MultiGraph()
    G.add_nodes_from(g.vertices)
    G.add_edges_from((e.source, e.target) for e in g.edges)
    return G


def underlying_shape(g: WlogGraph) -> Shape:
    G = _multigraph(g)
    comps = nx.number_connected_components(G) if len(G) else 0
    rank = G.number_of_edges() - G.number_of_nodes() + comps
    if comps == 1:
        if rank == 0:
            return Shape("tree", 0, 1)
        # a loop contributes two edge-ends to its vertex
        if rank == 1 and all(d == 2 for _, d in G.degree()):
            return Shape("circle", 1, 1)
    return Shape("other", rank, comps)


def subdivide(g: WlogGraph, names: Iterable[str] | None = None) -> WlogGraph:
    """Replace every edge with label ``t1...ts`` by a path of ``s`` LOG edges.

    Fresh vertices come from ``names`` in order of appearance (edge order,
    then position along the edge), or are called ``e{edge}_{m}``.  An
    inverse letter ``z^-1`` yields an edge pointing backwards labeled ``z``.
    Fresh vertices of an edge are listed right after the edge's source.
    """
    supply = iter(names) if names is not None else None
    fresh_after: dict[str, list[str]] = {v: [] for v in g.vertices}
    new_edges: list[WlogEdge] = []
    for idx, e in enumerate(g.edges):
        s = len(e.label)
        path = [e.source]
        for m in range(1, s):
            if supply is not None:
                try:
                    name = next(supply)
                except StopIteration:
                    raise ValueError("not enough fresh vertex names supplied") from None
            else:
                name = f"e{idx}_{m}"
            fresh_after[e.source].append(name)
            path.append(name)
        path.append(e.target)
        for m, t in enumerate(e.label, start=1):
            lab = Word((Letter(t.gen, 1),))
            if t.sign > 0:
                new_edges.append(WlogEdge(path[m - 1], path[m], lab))
            else:
                new_edges.append(WlogEdge(path[m], path[m - 1], lab))
    vertices = []
    for v in g.vertices:
        vertices.append(v)
        vertices.extend(fresh_after[v])
    return WlogGraph(tuple(vertices), tuple(new_edges))


def decompose_relator(r: Word, generators: Iterable[str] | None = None) -> WlogRelator | None:
    """Read ``r`` literally as ``x w y^-1 w^-1`` with ``|w| >= 1``.

    The word length fixes ``|w|``, so the decomposition is unique when it
    exists.
    """
    n = len(r)
    if n < 4 or n % 2:
        return None
    s = (n - 2) // 2
    head, tail = r[0], r[s + 1]
    if head.sign != 1 or tail.sign != -1:
        return None
    w = r[1 : s + 1]
    if r[s + 2 :] != invert(w):
        return None
    if generators is not None:
        known = set(generators)
        if not r.generators <= known:
            return None
    return WlogRelator(head.gen, w, tail.gen)


def presentation_to_graph(p: Presentation) -> WlogGraph | None:
    """Inverse of :func:`build_presentation`; None if some relator fails to decompose."""
    edges = []
    for r in p.relators:
        d = decompose_relator(r, p.generators)
        if d is None:
            return None
        edges.append(WlogEdge(d.alpha, d.beta, d.w))
    return WlogGraph(p.generators, tuple(edges))
