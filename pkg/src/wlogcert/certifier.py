"""Mechanical check of the DR criterion for injective WLOG presentations.

For relators ``x_a w x_b^-1 w^-1`` with ``w = t_1 ... t_s`` the criterion
asks for

* an injective labeling and ``s >= 2`` for every relator,
* cyclically reduced relators,
* the four words ``x_a t_1``, ``t_1^-1 x_a``, ``x_b t_s^-1``, ``t_s x_b``
  of every relator not to be pieces,
* no ``w`` of the form ``x^m`` or ``x^-m`` with ``m >= 2``.

When all hold the presentation complex is diagrammatically reducible.  A
rejection only says the criterion does not apply.
"""

from __future__ import annotations

import hashlib
import itertools
import json
from dataclasses import dataclass, field
from typing import NamedTuple, Sequence

from .wlog import (
    Presentation,
    WlogGraph,
    WlogRelator,
    build_presentation,
    decompose_relator,
)
from .words import (
    INVERTED,
    FORWARD,
    Letter,
    Occurrence,
    Word,
    format_word,
    occurrences,
)

__all__ = [
    "CONDITIONS",
    "DR_CERTIFIED",
    "REJECTED",
    "NOT_APPLICABLE",
    "THEOREM_TAG",
    "Evidence",
    "ConditionReport",
    "Certificate",
    "bigrams",
    "is_piece",
    "check_hypotheses",
    "certify",
    "presentation_digest",
]

CONDITIONS = (
    "injective",
    "s_at_least_2",
    "cond1_cyclically_reduced",
    "cond2_bigrams_not_pieces",
    "cond3_no_proper_power",
)

DR_CERTIFIED = "DR_certified"
REJECTED = "rejected"
NOT_APPLICABLE = "not_applicable"
THEOREM_TAG = "Theorem 1"

PIECE_MODES = ("cyclic", "linear")


class Evidence(NamedTuple):
    relator: int
    position: int
    orientation: str
    word: str

    def to_json(self) -> dict:
        return self._asdict()


@dataclass(frozen=True)
class ConditionReport:
    condition: str
    holds: bool
    evidence: tuple[Evidence, ...] = ()

    def __post_init__(self):
        if self.condition not in CONDITIONS:
            raise ValueError(f"unknown condition {self.condition!r}")
        if not self.holds and not self.evidence:
            raise ValueError("a failed condition needs evidence")

    def to_json(self) -> dict:
        return {
            "condition": self.condition,
            "holds": self.holds,
            "evidence": [e.to_json() for e in self.evidence],
        }


@dataclass(frozen=True)
class Certificate:
    digest: str
    verdict: str
    reports: tuple[ConditionReport, ...] = field(default=())
    theorem: str = THEOREM_TAG
    explanation: str | None = None

    @property
    def certified(self) -> bool:
        return self.verdict == DR_CERTIFIED

    def report(self, condition: str) -> ConditionReport:
        for r in self.reports:
            if r.condition == condition:
                return r
        raise KeyError(condition)

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict,
            "theorem": self.theorem,
            "digest": self.digest,
            "explanation": self.explanation,
            "reports": [r.to_json() for r in self.reports],
        }


def presentation_digest(p: Presentation) -> str:
    canon = json.dumps(
        {"generators": list(p.generators), "relators": [format_word(r) for r in p.relators]},
        sort_keys=True,
        separators=(",", ":"),
    )
    return hashlib.sha256(canon.encode()).hexdigest()


class Bigram(NamedTuple):
    word: Word
    defining: Occurrence


def bigrams(rel: WlogRelator, index: int = 0) -> list[Bigram]:
    """The four boundary words of a relator with their defining occurrences.

    In ``x_a w x_b^-1 w^-1`` (length ``L = 2s + 2``) they sit at
    ``x_a t_1``: position 0 forward; ``t_1^-1 x_a``: position ``L - 1``
    forward (wrapping); ``x_b t_s^-1``: position ``s`` inverted;
    ``t_s x_b``: position ``s + 1`` inverted.
    """
    a, b = Letter(rel.alpha, 1), Letter(rel.beta, 1)
    t1, ts = rel.w[0], rel.w[-1]
    s, L = rel.s, len(rel)
    return [
        Bigram(Word((a, t1)), Occurrence(index, 0, FORWARD, True)),
        Bigram(Word((t1.inverse(), a)), Occurrence(index, L - 1, FORWARD, True)),
        Bigram(Word((b, ts.inverse())), Occurrence(index, s, INVERTED, True)),
        Bigram(Word((ts, b)), Occurrence(index, s + 1, INVERTED, True)),
    ]


def is_piece(
    b: Word,
    relators: Sequence[Word],
    defining: Occurrence,
    piece_matching: str = "cyclic",
) -> tuple[bool, list[Occurrence]]:
    """Whether ``b`` or its inverse occurs anywhere other than at ``defining``.

    ``defining`` must be a genuine cyclic occurrence of ``b`` in its relator.
    """
    if piece_matching not in PIECE_MODES:
        raise ValueError(f"piece_matching must be one of {PIECE_MODES}")
    home = relators[defining.relator]
    own = occurrences(b, home, cyclic=True, include_inverse=True, relator=defining.relator)
    if not any(
        (o.position, o.orientation) == (defining.position, defining.orientation) for o in own
    ):
        raise ValueError(f"defining occurrence {defining} does not match {format_word(b)!r}")
    cyclic = piece_matching == "cyclic"
    others = []
    for i, r in enumerate(relators):
        for o in occurrences(b, r, cyclic=cyclic, include_inverse=True, relator=i):
            if (o.relator, o.position, o.orientation) != (
                defining.relator,
                defining.position,
                defining.orientation,
            ):
                others.append(o)
    return bool(others), others


def _report(condition: str, evidence: list[Evidence]) -> ConditionReport:
    return ConditionReport(condition, not evidence, tuple(evidence))


def check_hypotheses(
    rels: Sequence[WlogRelator],
    graph: WlogGraph | None = None,
    piece_matching: str = "cyclic",
) -> list[ConditionReport]:
    if not rels:
        raise ValueError("need at least one relator")
    words = [r.word for r in rels]
    labels = graph.labels if graph is not None else [r.w for r in rels]

    inj = []
    for i, j in itertools.permutations(range(len(labels)), 2):
        for o in occurrences(labels[i], labels[j], include_inverse=True, relator=j):
            inj.append(Evidence(j, o.position, o.orientation, format_word(labels[i])))

    short = [Evidence(i, 1, FORWARD, format_word(r.w)) for i, r in enumerate(rels) if r.s < 2]

    unreduced = []
    for i, w in enumerate(words):
        n = len(w)
        for p in range(n):
            u, v = w[p], w[(p + 1) % n]
            if u == v.inverse():
                unreduced.append(Evidence(i, p, FORWARD, format_word(Word((u, v)))))

    pieces = []
    for i, r in enumerate(rels):
        for bg in bigrams(r, i):
            _, others = is_piece(bg.word, words, bg.defining, piece_matching)
            pieces.extend(
                Evidence(o.relator, o.position, o.orientation, format_word(bg.word)) for o in others
            )

    powers = []
    for i, r in enumerate(rels):
        if r.s >= 2 and len(set(r.w)) == 1:
            powers.append(Evidence(i, 1, FORWARD, format_word(r.w)))

    return [
        _report("injective", inj),
        _report("s_at_least_2", short),
        _report("cond1_cyclically_reduced", unreduced),
        _report("cond2_bigrams_not_pieces", pieces),
        _report("cond3_no_proper_power", powers),
    ]


def certify(obj: WlogGraph | Presentation) -> Certificate:
    """Certificate for a WLOG graph or a raw presentation.

    Raw presentations must consist of relators of the literal shape
    ``x w y^-1 w^-1``; otherwise the verdict is ``not_applicable``.
    """
    if isinstance(obj, WlogGraph):
        graph = obj
        pres, rels = build_presentation(obj)
    else:
        graph = None
        pres = obj
        rels = []
        for i, r in enumerate(pres.relators):
            d = decompose_relator(r, pres.generators)
            if d is None:
                return Certificate(
                    presentation_digest(pres),
                    NOT_APPLICABLE,
                    explanation=f"relator {i} ({format_word(r)}) is not of the form x w y^-1 w^-1",
                )
            rels.append(d)
    digest = presentation_digest(pres)
    if not rels:
        return Certificate(digest, NOT_APPLICABLE, explanation="presentation has no relators")
    reports = check_hypotheses(rels, graph)
    verdict = DR_CERTIFIED if all(r.holds for r in reports) else REJECTED
    return Certificate(digest, verdict, tuple(reports))
