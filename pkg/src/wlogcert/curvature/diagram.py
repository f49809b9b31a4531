"""Cellulated closed surfaces as labeled combinatorial maps.

Darts are the oriented boundary sides of faces.  ``faces`` lists each face
boundary as a cyclic dart sequence, ``pairing`` glues every dart to the
dart running the other way along the same edge.  The darts leaving a vertex
are an orbit of ``d -> next(pair(d))``.

Corner ``(f, i)`` of face ``f`` lies between its boundary darts ``i`` and
``i + 1``, at the end vertex of dart ``i``.

A face label ``(relator, orientation, rotation)`` says that boundary dart
``i`` of the face reads letter ``(i + rotation) mod L`` of the relator, or
of its inverse when the orientation is ``"inv"``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Mapping, Sequence

from ..words import Word, invert
from .link import Corner

__all__ = [
    "FaceLabel",
    "Diagram",
    "DiagramError",
    "CurvatureReport",
    "euler_characteristic",
    "curvatures",
    "verify_gauss_bonnet",
    "is_reduced",
    "weights_from_json",
    "weights_to_json",
]


class DiagramError(ValueError):
    pass


@dataclass(frozen=True)
class FaceLabel:
    relator: int
    orientation: str = "fwd"
    rotation: int = 0

    def __post_init__(self):
        if self.orientation not in ("fwd", "inv"):
            raise DiagramError(f"orientation must be 'fwd' or 'inv', got {self.orientation!r}")

    def relator_position(self, i: int, length: int) -> int:
        """Relator letter index carried by boundary dart ``i``."""
        k = (i + self.rotation) % length
        return k if self.orientation == "fwd" else length - 1 - k


@dataclass(frozen=True)
class Diagram:
    darts: int
    pairing: tuple[tuple[int, int], ...]
    faces: tuple[tuple[int, ...], ...]
    labels: tuple[FaceLabel | None, ...] | None = None

    def __post_init__(self):
        object.__setattr__(self, "pairing", tuple(tuple(p) for p in self.pairing))
        object.__setattr__(self, "faces", tuple(tuple(f) for f in self.faces))
        if self.labels is not None:
            object.__setattr__(self, "labels", tuple(self.labels))

    # -- construction -------------------------------------------------------

    @classmethod
    def from_polygons(
        cls,
        polygons: Sequence[Sequence],
        labels: Sequence[FaceLabel | None] | None = None,
    ) -> Diagram:
        """Glue polygons given as cyclic vertex lists.

        The side ``u -> v`` of one polygon is glued to the unique side
        ``v -> u`` of another (or the same) polygon.
        """
        faces, sides = [], {}
        d = 0
        for poly in polygons:
            face = []
            for i, u in enumerate(poly):
                v = poly[(i + 1) % len(poly)]
                if (u, v) in sides:
                    raise DiagramError(f"side {u!r} -> {v!r} occurs twice")
                sides[(u, v)] = d
                face.append(d)
                d += 1
            faces.append(tuple(face))
        pairing = []
        for (u, v), a in sides.items():
            b = sides.get((v, u))
            if b is None:
                raise DiagramError(f"side {u!r} -> {v!r} has no partner")
            if a < b:
                pairing.append((a, b))
        return cls(d, tuple(pairing), tuple(faces), None if labels is None else tuple(labels))

    # -- structure ----------------------------------------------------------

    def problems(self) -> list[str]:
        """Reasons the dart structure is not a closed surface (empty if it is)."""
        out = []
        seen: dict[int, int] = {}
        for a, b in self.pairing:
            if a == b:
                out.append(f"dart {a} is paired with itself")
            for x in (a, b):
                if not 0 <= x < self.darts:
                    out.append(f"dart {x} out of range")
                seen[x] = seen.get(x, 0) + 1
        for x in range(self.darts):
            if seen.get(x, 0) != 1:
                out.append(f"dart {x} appears {seen.get(x, 0)} times in the pairing")
        count: dict[int, int] = {}
        for f in self.faces:
            if not f:
                out.append("empty face")
            for x in f:
                count[x] = count.get(x, 0) + 1
        for x in range(self.darts):
            if count.get(x, 0) != 1:
                out.append(f"dart {x} lies on {count.get(x, 0)} face boundaries")
        if self.labels is not None and len(self.labels) != len(self.faces):
            out.append("one label per face required")
        return out

    @property
    def is_closed(self) -> bool:
        return not self.problems()

    def require_closed(self) -> None:
        probs = self.problems()
        if probs:
            raise DiagramError("; ".join(probs[:5]))

    @cached_property
    def opposite(self) -> dict[int, int]:
        out = {}
        for a, b in self.pairing:
            out[a], out[b] = b, a
        return out

    @cached_property
    def position(self) -> dict[int, tuple[int, int]]:
        """dart -> (face, boundary index)"""
        return {x: (fi, i) for fi, f in enumerate(self.faces) for i, x in enumerate(f)}

    def next_dart(self, x: int) -> int:
        fi, i = self.position[x]
        f = self.faces[fi]
        return f[(i + 1) % len(f)]

    @cached_property
    def vertex_of(self) -> dict[int, int]:
        """dart -> index of its start vertex"""
        self.require_closed()
        out: dict[int, int] = {}
        nv = 0
        for x in range(self.darts):
            if x in out:
                continue
            y = x
            while y not in out:
                out[y] = nv
                y = self.next_dart(self.opposite[y])
            nv += 1
        return out

    @property
    def num_vertices(self) -> int:
        return len(set(self.vertex_of.values())) if self.darts else 0

    def valency(self, v: int) -> int:
        return sum(1 for u in self.vertex_of.values() if u == v)

    def corners(self) -> list[Corner]:
        return [Corner(fi, i) for fi, f in enumerate(self.faces) for i in range(len(f))]

    def corner_vertex(self, c: Corner) -> int:
        f = self.faces[c.relator]
        return self.vertex_of[f[(c.position + 1) % len(f)]]

    # -- labels -------------------------------------------------------------

    def label(self, fi: int) -> FaceLabel:
        if self.labels is None or self.labels[fi] is None:
            raise DiagramError(f"face {fi} carries no label")
        return self.labels[fi]

    def relator_position(self, x: int) -> int:
        fi, i = self.position[x]
        return self.label(fi).relator_position(i, len(self.faces[fi]))

    def dart_letters(self, relators: Sequence[Word]) -> dict[int, object]:
        out = {}
        for fi, f in enumerate(self.faces):
            lab = self.label(fi)
            r = relators[lab.relator]
            if len(r) != len(f):
                raise DiagramError(f"face {fi} has {len(f)} sides, relator {lab.relator} has {len(r)} letters")
            word = r if lab.orientation == "fwd" else invert(r)
            word = word.rotate(lab.rotation)
            for i, x in enumerate(f):
                out[x] = word[i]
        return out

    def label_problems(self, relators: Sequence[Word]) -> list[str]:
        """Faces whose length misfits their relator, edges reading inconsistently."""
        try:
            letters = self.dart_letters(relators)
        except (DiagramError, IndexError) as exc:
            return [str(exc)]
        return [
            f"darts {a} and {b} read {letters[a]} and {letters[b]}"
            for a, b in self.pairing
            if letters[a] != letters[b].inverse()
        ]

    # -- serialization ------------------------------------------------------

    def to_json(self) -> dict:
        out: dict = {
            "darts": self.darts,
            "pairing": [list(p) for p in self.pairing],
            "faces": [list(f) for f in self.faces],
        }
        if self.labels is not None:
            out["labels"] = [
                None
                if lab is None
                else {"relator": lab.relator, "orientation": lab.orientation, "rotation": lab.rotation}
                for lab in self.labels
            ]
        return out

    @classmethod
    def from_json(cls, data: Mapping) -> Diagram:
        try:
            labels = data.get("labels")
            if labels is not None:
                labels = tuple(None if lab is None else FaceLabel(**lab) for lab in labels)
            return cls(
                int(data["darts"]),
                tuple((int(a), int(b)) for a, b in data["pairing"]),
                tuple(tuple(int(x) for x in f) for f in data["faces"]),
                labels,
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise DiagramError(f"bad diagram JSON: {exc}") from exc

    @classmethod
    def load(cls, path) -> Diagram:
        with open(path, encoding="utf-8") as fh:
            return cls.from_json(json.load(fh))


def euler_characteristic(d: Diagram) -> int:
    d.require_closed()
    return d.num_vertices - d.darts // 2 + len(d.faces)


@dataclass(frozen=True)
class CurvatureReport:
    vertex: tuple[Fraction, ...]
    face: tuple[Fraction, ...]
    total: Fraction
    euler_characteristic: int = field(default=0)


def curvatures(d: Diagram, weights: Mapping[Corner, Fraction]) -> CurvatureReport:
    """Vertex curvature ``2 - sum of corner weights`` and face curvature
    ``sum of corner weights - (sides - 2)``, exactly."""
    d.require_closed()
    vsum = [Fraction(0)] * d.num_vertices
    fsum = [Fraction(0)] * len(d.faces)
    for c in d.corners():
        try:
            w = Fraction(weights[c])
        except KeyError:
            raise DiagramError(f"no weight for corner {tuple(c)}") from None
        vsum[d.corner_vertex(c)] += w
        fsum[c.relator] += w
    kv = tuple(2 - s for s in vsum)
    kf = tuple(s - (len(f) - 2) for s, f in zip(fsum, d.faces))
    return CurvatureReport(kv, kf, sum(kv) + sum(kf), euler_characteristic(d))


def verify_gauss_bonnet(d: Diagram, weights: Mapping[Corner, Fraction]) -> bool:
    if not d.is_closed:
        return False
    rep = curvatures(d, weights)
    return rep.total == 2 * rep.euler_characteristic


def is_reduced(d: Diagram) -> bool:
    """False iff two faces fold onto each other across some edge.

    That happens when both faces carry the same relator with opposite
    orientations and the glued darts carry the same relator letter.
    """
    for a, b in d.pairing:
        fa, _ = d.position[a]
        fb, _ = d.position[b]
        la, lb = d.label(fa), d.label(fb)
        if la.relator != lb.relator or la.orientation == lb.orientation:
            continue
        if d.relator_position(a) == d.relator_position(b):
            return False
    return True


def weights_from_json(data) -> dict[Corner, Fraction]:
    """``{"weights": [[w00, w01, ...], ...]}`` with one list per face."""
    rows = data["weights"] if isinstance(data, Mapping) else data
    try:
        return {
            Corner(fi, i): Fraction(str(w)) for fi, row in enumerate(rows) for i, w in enumerate(row)
        }
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise DiagramError(f"bad weight: {exc}") from exc


def weights_to_json(d: Diagram, weights: Mapping[Corner, Fraction]) -> dict:
    return {
        "weights": [
            [str(weights[Corner(fi, i)]) for i in range(len(f))] for fi, f in enumerate(d.faces)
        ]
    }
