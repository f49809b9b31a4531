"""Long and short sides of WLOG relator faces and the stack-line weighting.

A face labeled by ``x_a w x_b^-1 w^-1`` (``|w| = s``) has two long sides
carrying ``w`` and ``w^-1`` and two short sides carrying ``x_a`` and
``x_b``.  The ``s + 1`` corners along a long side run from one extremal
vertex to the next; the corners of the two long sides partition the
corners of the face.

Weights along a long side ``S`` of face ``d``:

* Case I (every inner vertex of ``S`` has valency 2): ``1/2`` at both ends,
  ``1`` in between.
* Case II: ``2/3`` at both ends; an inner vertex of valency 2 gets ``1``; an
  inner vertex of higher valency gets ``1`` if it ends a stack line and
  ``2/3`` otherwise.

Each side then weighs at most ``s = |d|/2 - 1``, exactly ``s`` in Case I.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from ..certifier import check_hypotheses
from ..wlog import WlogRelator
from .diagram import Diagram, DiagramError
from .link import Corner

__all__ = ["LongSide", "FaceSides", "ProofWeights", "classify_sides", "proof_weights"]

HALF = Fraction(1, 2)
TWO_THIRDS = Fraction(2, 3)
ONE = Fraction(1)


@dataclass(frozen=True)
class LongSide:
    face: int
    index: int  # 0 for the w side, 1 for the w^-1 side
    boundary: tuple[int, ...]  # boundary indices in traversal order
    corners: tuple[Corner, ...]  # s + 1 corners, extremal ones first and last
    stacked_with: tuple[int, int] | None = None  # (face, side index)

    @property
    def is_stack_line(self) -> bool:
        return self.stacked_with is not None


@dataclass(frozen=True)
class FaceSides:
    face: int
    long_sides: tuple[LongSide, LongSide]
    short_sides: tuple[int, int]  # boundary indices of the x_a and x_b darts
    extremal_corners: tuple[Corner, ...]
    extremal_vertices: tuple[int, ...]

    @property
    def stack_lines(self) -> int:
        return sum(side.is_stack_line for side in self.long_sides)


def _side_run(label_pos, L: int, wanted: set[int]) -> tuple[int, ...]:
    idx = [i for i in range(L) if label_pos[i] in wanted]
    start = next(i for i in idx if (i - 1) % L not in idx)
    run = tuple((start + k) % L for k in range(len(idx)))
    if set(run) != set(idx):
        raise DiagramError("long side is not contiguous")
    return run


def _raw_sides(d: Diagram, rels: Sequence[WlogRelator]):
    out = []
    for fi, face in enumerate(d.faces):
        lab = d.label(fi)
        if not 0 <= lab.relator < len(rels):
            raise DiagramError(f"face {fi} refers to unknown relator {lab.relator}")
        s = rels[lab.relator].s
        L = len(face)
        if L != 2 * s + 2:
            raise DiagramError(f"face {fi} has {L} sides, relator {lab.relator} needs {2 * s + 2}")
        pos = [lab.relator_position(i, L) for i in range(L)]
        runs = (
            _side_run(pos, L, set(range(1, s + 1))),
            _side_run(pos, L, set(range(s + 2, 2 * s + 2))),
        )
        short = (pos.index(0), pos.index(s + 1))
        corner_sets = []
        for run in runs:
            corner_sets.append(
                (Corner(fi, (run[0] - 1) % L),) + tuple(Corner(fi, i) for i in run)
            )
        covered = [c.position for cs in corner_sets for c in cs]
        if sorted(covered) != list(range(L)):
            raise DiagramError(f"long sides of face {fi} do not partition its corners")
        out.append((runs, short, corner_sets))
    return out


def classify_sides(d: Diagram, rels: Sequence[WlogRelator]) -> list[FaceSides]:
    d.require_closed()
    raw = _raw_sides(d, rels)
    owner: dict[tuple[int, ...], tuple[int, int]] = {}
    side_darts = {}
    for fi, (runs, _, _) in enumerate(raw):
        for si, run in enumerate(runs):
            darts = tuple(d.faces[fi][i] for i in run)
            side_darts[fi, si] = darts
            owner[darts] = (fi, si)

    result = []
    for fi, (runs, short, corner_sets) in enumerate(raw):
        sides = []
        for si, run in enumerate(runs):
            partner_darts = tuple(d.opposite[x] for x in reversed(side_darts[fi, si]))
            partner = owner.get(partner_darts)
            if partner is not None:
                pf = partner[0]
                # stacked faces carry the same relator the same way round
                if partner == (fi, si) or d.label(pf).relator != d.label(fi).relator or (
                    d.label(pf).orientation != d.label(fi).orientation
                ):
                    partner = None
            sides.append(LongSide(fi, si, run, corner_sets[si], partner))
        extremal = (
            corner_sets[0][0],
            corner_sets[0][-1],
            corner_sets[1][0],
            corner_sets[1][-1],
        )
        result.append(
            FaceSides(
                fi,
                (sides[0], sides[1]),
                short,
                extremal,
                tuple(d.corner_vertex(c) for c in extremal),
            )
        )
    return result


@dataclass(frozen=True)
class ProofWeights:
    weights: dict[Corner, Fraction]
    cases: dict[tuple[int, int], str]  # (face, side) -> "I" or "II"
    side_sums: dict[tuple[int, int], Fraction]


def proof_weights(
    d: Diagram, rels: Sequence[WlogRelator], check: bool = True
) -> ProofWeights:
    """Corner weights from the Case I / Case II rules.

    With ``check`` the relators must satisfy every hypothesis of the
    certifier.
    """
    if check:
        failed = [r.condition for r in check_hypotheses(rels) if not r.holds]
        if failed:
            raise ValueError(f"relators violate hypotheses: {', '.join(failed)}")
    faces = classify_sides(d, rels)
    valency: dict[int, int] = {}
    for v in d.vertex_of.values():
        valency[v] = valency.get(v, 0) + 1
    stack_ends = {
        d.corner_vertex(c)
        for fs in faces
        for side in fs.long_sides
        if side.is_stack_line
        for c in (side.corners[0], side.corners[-1])
    }

    weights: dict[Corner, Fraction] = {}
    cases = {}
    sums = {}
    for fs in faces:
        for side in fs.long_sides:
            inner = side.corners[1:-1]
            inner_valency = [valency[d.corner_vertex(c)] for c in inner]
            if all(k == 2 for k in inner_valency):
                case, end = "I", HALF
                inner_w = [ONE] * len(inner)
            else:
                case, end = "II", TWO_THIRDS
                inner_w = []
                for c, k in zip(inner, inner_valency):
                    if k == 2 or d.corner_vertex(c) in stack_ends:
                        inner_w.append(ONE)
                    else:
                        inner_w.append(TWO_THIRDS)
            ws = [end] + inner_w + [end]
            for c, w in zip(side.corners, ws):
                if c in weights:
                    raise DiagramError(f"corner {tuple(c)} weighted twice")
                weights[c] = w
            cases[fs.face, side.index] = case
            sums[fs.face, side.index] = sum(ws, Fraction(0))
    return ProofWeights(weights, cases, sums)
