import json
import random

import pytest
from hypothesis import given, settings, strategies as st

from helpers import brute_is_piece, inv_tokens, random_wlog, tokens
from wlogcert.certifier import (
    CONDITIONS,
    DR_CERTIFIED,
    NOT_APPLICABLE,
    REJECTED,
    bigrams,
    certify,
    check_hypotheses,
    is_piece,
)
from wlogcert.cyclic import CyclicParams, build_C
from wlogcert.wlog import Presentation, WlogEdge, WlogGraph, build_presentation
from wlogcert.words import Occurrence, Word, parse_word

EX1 = WlogGraph(
    ("a", "b", "c", "d"),
    (
        WlogEdge("a", "b", Word.of("d", "a")),
        WlogEdge("b", "c", Word.of("d", "b")),
        WlogEdge("c", "d", Word.of("a", "c")),
    ),
)


def c5():
    return build_C(CyclicParams.parse(5, "x3 x1"))


def test_example1_certified():
    cert = certify(EX1)
    assert cert.verdict == DR_CERTIFIED
    assert [r.condition for r in cert.reports] == list(CONDITIONS)
    assert all(r.holds for r in cert.reports)
    assert cert.theorem == "Theorem 1"


def test_c5_certified():
    _, p, _ = c5()
    assert certify(p).verdict == DR_CERTIFIED


def test_not_wlog_shape():
    cert = certify(Presentation(("a",), (Word.of("a", "a", "a"),)))
    assert cert.verdict == NOT_APPLICABLE and cert.explanation
    assert cert.reports == ()


def test_proper_power_rejected():
    g = WlogGraph(("a", "b", "c"), (WlogEdge("a", "c", Word.of("b", "b")),))
    cert = certify(g)
    assert cert.verdict == REJECTED
    rep = cert.report("cond3_no_proper_power")
    assert not rep.holds and rep.evidence[0].relator == 0 and rep.evidence[0].word == "b b"


def test_s_equals_one_rejected():
    g = WlogGraph(("a", "b"), (WlogEdge("a", "a", Word.of("b")),))
    assert not certify(g).report("s_at_least_2").holds


def test_c4_fails_cond2():
    _, p, _ = build_C(CyclicParams.parse(4, "x3 x1"))
    cert = certify(p)
    assert cert.verdict == REJECTED
    assert [r.condition for r in cert.reports if not r.holds] == ["cond2_bigrams_not_pieces"]


def test_piece_examples():
    rels = [parse_word("a b a^-1 b^-1", "abc"), parse_word("a b c", "abc")]
    piece, others = is_piece(Word.of("a", "b"), rels, Occurrence(0, 0, "fwd", True))
    assert piece and any(o.relator == 1 for o in others)

    _, p, _ = c5()
    x1x3 = parse_word("x1 x3", p.generators)
    assert is_piece(x1x3, p.relators, Occurrence(0, 0, "fwd", True)) == (False, [])
    x3x1 = parse_word("x3 x1", p.generators)
    piece, others = is_piece(x3x1, p.relators, Occurrence(0, 1, "fwd", True))
    assert piece
    assert (0, 4, "inv") in {(o.relator, o.position, o.orientation) for o in others}


def test_defining_occurrence_must_match():
    rels = [parse_word("a b a^-1 b^-1", "ab")]
    with pytest.raises(ValueError):
        is_piece(Word.of("a", "b"), rels, Occurrence(0, 1, "fwd", True))


@settings(max_examples=200)
@given(st.integers(0, 10**9))
def test_linear_evidence_within_cyclic(seed):
    g = random_wlog(random.Random(seed))
    _, rels = build_presentation(g)
    cond = "cond2_bigrams_not_pieces"
    lin = next(r for r in check_hypotheses(rels, g, "linear") if r.condition == cond)
    cyc = next(r for r in check_hypotheses(rels, g, "cyclic") if r.condition == cond)
    assert set(lin.evidence) <= set(cyc.evidence)


def test_unknown_piece_mode():
    _, _, rels = c5()
    with pytest.raises(ValueError):
        check_hypotheses(rels, piece_matching="fuzzy")


def _recheck(word_text, rel_tokens, position, orientation, cyclic):
    needle = word_text.split()
    n = [(t.removesuffix("^-1"), -1 if t.endswith("^-1") else 1) for t in needle]
    if orientation == "inv":
        n = inv_tokens(n)
    L = len(rel_tokens)
    if cyclic:
        return all(rel_tokens[(position + i) % L] == n[i] for i in range(len(n)))
    return rel_tokens[position : position + len(n)] == n


def check_evidence(graph):
    pres, rels = build_presentation(graph)
    cert = certify(graph)
    for rep in cert.reports:
        assert rep.holds == (not rep.evidence)
        for ev in rep.evidence:
            if rep.condition == "injective":
                assert _recheck(ev.word, tokens(graph.labels[ev.relator]), ev.position, ev.orientation, False)
            elif rep.condition == "cond2_bigrams_not_pieces":
                assert _recheck(ev.word, tokens(pres.relators[ev.relator]), ev.position, ev.orientation, True)
            elif rep.condition == "cond1_cyclically_reduced":
                t = tokens(pres.relators[ev.relator])
                u, v = t[ev.position], t[(ev.position + 1) % len(t)]
                assert u[0] == v[0] and u[1] == -v[1]
            elif rep.condition == "s_at_least_2":
                assert rels[ev.relator].s < 2
            else:
                assert len(set(rels[ev.relator].w)) == 1
    return cert


@settings(max_examples=300)
@given(st.integers(0, 10**9))
def test_evidence_is_rechecked(seed):
    check_evidence(random_wlog(random.Random(seed)))


@settings(max_examples=300)
@given(st.integers(0, 10**9))
def test_cond2_matches_enumerator(seed):
    g = random_wlog(random.Random(seed), max_vertices=4, max_edges=5, max_label=5)
    pres, rels = build_presentation(g)
    for i, r in enumerate(rels):
        for bg in bigrams(r, i):
            got, _ = is_piece(bg.word, pres.relators, bg.defining)
            assert got == brute_is_piece(bg.word, pres.relators, bg.defining)


def test_bigram_defining_positions():
    _, rels = build_presentation(EX1)
    r = rels[0]  # a d a b^-1 a^-1 d^-1
    got = [(str(b.word), b.defining.position, b.defining.orientation) for b in bigrams(r)]
    assert got == [
        ("a d", 0, "fwd"),
        ("d^-1 a", 5, "fwd"),
        ("b a^-1", 2, "inv"),
        ("a b", 3, "inv"),
    ]


@settings(max_examples=100)
@given(st.integers(0, 10**9))
def test_certificate_deterministic(seed):
    g = random_wlog(random.Random(seed))
    a = json.dumps(certify(g).to_json(), sort_keys=True)
    b = json.dumps(certify(g).to_json(), sort_keys=True)
    assert a == b


def test_graph_and_presentation_agree():
    pres, _ = build_presentation(EX1)
    assert certify(pres).to_json() == certify(EX1).to_json()
