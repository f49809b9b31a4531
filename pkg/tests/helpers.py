"""Independent oracles, random generators and diagram fixtures for the tests.

Nothing here calls the matching or reduction code under test.
"""

from __future__ import annotations

import random
from fractions import Fraction

from wlogcert.curvature.diagram import Diagram, FaceLabel
from wlogcert.wlog import Presentation, WlogEdge, WlogGraph, WlogRelator
from wlogcert.words import Letter, Word

# -- word oracles ------------------------------------------------------------


def tokens(w: Word) -> list[tuple[str, int]]:
    return [(l.gen, l.sign) for l in w]


def inv_tokens(t):
    return [(g, -s) for g, s in reversed(t)]


def brute_free_reduce(w: Word) -> Word:
    t = tokens(w)
    changed = True
    while changed:
        changed = False
        for i in range(len(t) - 1):
            if t[i][0] == t[i + 1][0] and t[i][1] == -t[i + 1][1]:
                del t[i : i + 2]
                changed = True
                break
    return Word(tuple(Letter(g, s) for g, s in t))


def brute_occurrences(needle: Word, hay: Word, cyclic: bool, include_inverse: bool):
    """(position, orientation) pairs, cyclic via the doubled haystack."""
    n, h = tokens(needle), tokens(hay)
    text = h + h[:-1] if cyclic else h
    limit = len(h) if cyclic else len(h) - len(n) + 1
    out = set()
    pats = [("fwd", n)] + ([("inv", inv_tokens(n))] if include_inverse else [])
    for pos in range(max(limit, 0)):
        for o, p in pats:
            if text[pos : pos + len(p)] == p and len(p) <= len(h):
                out.add((pos, o))
    return out


def brute_injective(labels) -> bool:
    strs = [tokens(l) for l in labels]
    for i, a in enumerate(strs):
        for j, b in enumerate(strs):
            if i == j:
                continue
            for cand in (a, inv_tokens(a)):
                if any(b[k : k + len(cand)] == cand for k in range(len(b) - len(cand) + 1)):
                    return False
    return True


def brute_is_piece(b: Word, relators, defining) -> bool:
    """Prefix of two entries of the indexed symmetrized relator multiset.

    Entries are ``(relator, orientation, start)`` for every rotation of every
    relator and its inverse; ``defining`` is mapped into the same indexing.
    """
    bt = tokens(b)
    hits = set()
    for i, r in enumerate(relators):
        t = tokens(r)
        L = len(t)
        for orient, word in (("fwd", t), ("inv", inv_tokens(t))):
            for k in range(L):
                rot = word[k:] + word[:k]
                if len(bt) <= L and rot[: len(bt)] == bt:
                    hits.add((i, orient, k))
    d = defining
    L = len(relators[d.relator])
    if d.orientation == "fwd":
        key = (d.relator, "fwd", d.position)
    else:
        key = (d.relator, "inv", (L - len(bt) - d.position) % L)
    assert key in hits, "defining occurrence must be a hit"
    return len(hits - {key}) > 0


def conjugate_up_to_inverse(u: Word, v: Word) -> bool:
    """Whether freely reduced ``u`` is conjugate to ``v`` or ``v^-1``."""

    def core(w):
        t = tokens(brute_free_reduce(w))
        while len(t) >= 2 and t[0][0] == t[-1][0] and t[0][1] == -t[-1][1]:
            t = t[1:-1]
        return t

    a, b = core(u), core(v)
    if len(a) != len(b):
        return False
    doubled = a + a
    for cand in (b, inv_tokens(b)):
        if not cand:
            return not a
        if any(doubled[k : k + len(cand)] == cand for k in range(len(a))):
            return True
    return False


def tietze_recover(original: WlogEdge, path_edges, fresh: list[str]) -> Word:
    """Eliminate the fresh vertices along one subdivided edge.

    ``path_edges`` are the LOG edges replacing ``original`` in order.  Each
    of the first ``s - 1`` relators defines the next fresh vertex in terms
    of the previous one; the expressions are substituted into the last
    relator, which is returned freely reduced.
    """
    expr = {original.source: Word.of(original.source), original.target: Word.of(original.target)}
    for e, y in zip(path_edges[:-1], fresh):
        z = Word.of(e.label[0].gen)
        # relation source z = z target
        if e.target == y:
            expr[y] = z.inverse() + expr[e.source] + z
        else:
            expr[y] = z + expr[e.target] + z.inverse()
    last = path_edges[-1]
    z = Word.of(last.label[0].gen)
    rel = expr[last.source] + z + expr[last.target].inverse() + z.inverse()
    return brute_free_reduce(rel)


# -- random objects ------------------------------------------------------------


def random_word(rng: random.Random, gens, lo=0, hi=8) -> Word:
    n = rng.randint(lo, hi)
    return Word(tuple(Letter(rng.choice(gens), rng.choice((1, -1))) for _ in range(n)))


def random_wlog(rng: random.Random, max_vertices=4, max_edges=5, max_label=5, reduced=False) -> WlogGraph:
    nv = rng.randint(1, max_vertices)
    verts = tuple("abcdefgh"[:nv])
    edges = []
    for _ in range(rng.randint(1, max_edges)):
        while True:
            lab = random_word(rng, verts, 1, max_label)
            if not reduced or brute_free_reduce(lab) == lab:
                break
        edges.append(WlogEdge(rng.choice(verts), rng.choice(verts), lab))
    return WlogGraph(verts, tuple(edges))


def random_weights(rng: random.Random, d: Diagram):
    return {c: Fraction(rng.randint(-30, 30), rng.randint(1, 12)) for c in d.corners()}


# -- diagram fixtures -----------------------------------------------------------

TETRAHEDRON = [[0, 1, 2], [0, 3, 1], [1, 3, 2], [0, 2, 3]]


def torus_grid(k=3):
    return [
        [(i, j), ((i + 1) % k, j), ((i + 1) % k, (j + 1) % k), (i, (j + 1) % k)]
        for i in range(k)
        for j in range(k)
    ]


def cube():
    return [[0, 1, 2, 3], [4, 7, 6, 5], [0, 4, 5, 1], [1, 5, 6, 2], [2, 6, 7, 3], [3, 7, 4, 0]]


def square_torus() -> Diagram:
    return Diagram(4, ((0, 2), (1, 3)), ((0, 1, 2, 3),))


def refine(polys, rng: random.Random, steps: int):
    """Random edge subdivisions and stellar face subdivisions (keep the surface)."""
    polys = [list(p) for p in polys]
    fresh = 0
    for _ in range(steps):
        fresh += 1
        new = ("new", fresh)
        if rng.random() < 0.5:
            fi = rng.randrange(len(polys))
            p = polys[fi]
            i = rng.randrange(len(p))
            u, v = p[i], p[(i + 1) % len(p)]
            p.insert(i + 1, new)
            for q in polys:
                for j in range(len(q)):
                    if q[j] == v and q[(j + 1) % len(q)] == u and q is not p:
                        q.insert(j + 1, new)
                        break
                else:
                    continue
                break
        else:
            fi = rng.randrange(len(polys))
            p = polys.pop(fi)
            polys.extend([[new, p[i], p[(i + 1) % len(p)]] for i in range(len(p))])
    return polys


# A presentation whose relators use disjoint generators, so every hypothesis
# of the certifier holds; middle words have lengths 2, 5, 6 and 7.
FIXTURE_EDGES = (
    ("a", "b", "c e"),
    ("f", "g", "h i h i i"),
    ("j", "k", "l m l m m l"),
    ("n", "o", "p q p q q p p"),
)


def fixture_relators() -> list[WlogRelator]:
    from wlogcert.words import parse_word

    gens = "a b c e f g h i j k l m n o p q".split()
    return [WlogRelator(a, parse_word(w, gens), b) for a, b, w in FIXTURE_EDGES]


def fixture_presentation() -> Presentation:
    rels = fixture_relators()
    gens = "a b c e f g h i j k l m n o p q".split()
    return Presentation(tuple(gens), tuple(r.word for r in rels))


FWD = FaceLabel(0, "fwd", 0)


def stacked_pair() -> Diagram:
    """Two faces sharing a whole long side, closed up by one outer face.

    Faces 0 and 1 carry the length-5 relator; face 0's ``w`` side and face
    1's ``w^-1`` side are both ``P0 ... P5``.
    """
    P = [f"P{i}" for i in range(6)]
    T = [f"T{i}" for i in range(6)]
    B = [f"B{i}" for i in range(6)]
    d = [T[0]] + P + [T[5], T[4], T[3], T[2], T[1]]
    d2 = [P[0]] + B + [P[5], P[4], P[3], P[2], P[1]]
    outer = [P[0]] + T + [P[5]] + B[::-1]
    return Diagram.from_polygons(
        [d, d2, outer], [FaceLabel(1), FaceLabel(1), FaceLabel(2)]
    )


def case_two() -> Diagram:
    """Face 0 (length-5 relator) with faces 1, 2 (length-2 relator) stacked
    along a line ending at an inner vertex of face 0's upper long side.

    Upper side of face 0 runs P5 -> P0; P2, P3, P4 have valency 3, P1 has
    valency 2 and P3 ends the stack line.
    """
    P = [f"P{i}" for i in range(6)]
    Q = [f"Q{i}" for i in range(6)]
    d = [P[0]] + Q + [P[5], P[4], P[3], P[2], P[1]]
    d1 = [P[2], P[3], "M", "V3", "U2", "N2"]
    d2 = [P[3], P[4], "N4", "U4", "V3", "M"]
    outer = [P[0], P[1], P[2], "N2", "U2", "V3", "U4", "N4", P[4], P[5]] + Q[::-1]
    return Diagram.from_polygons(
        [d, d1, d2, outer], [FaceLabel(1), FaceLabel(0), FaceLabel(0), FaceLabel(3)]
    )


def folded_pair(length=6) -> Diagram:
    """Sphere made of one face and its mirror image."""
    v = list(range(length))
    return Diagram.from_polygons(
        [v, [v[0]] + v[:0:-1]], [FaceLabel(0, "fwd", 0), FaceLabel(0, "inv", 0)]
    )
