"""Text formats for WLOG graphs and presentations.

WLOG file::

    # comment
    vertices: a b c d
    edge a -> b : d a
    edge b -> c : d b

Presentation file::

    generators: a b
    relator: a b a^-1 b^-1

Keywords may not be mixed between the two kinds.  Words use the token
syntax of :func:`wlogcert.words.parse_word`.
"""

from __future__ import annotations

import re
from pathlib import Path

from .wlog import Presentation, WlogEdge, WlogGraph, decompose_relator
from .words import GENERATOR_NAME, Word, WordParseError, format_word, parse_word

__all__ = [
    "FormatError",
    "parse_text",
    "parse_file",
    "parse_wlog_file",
    "format_wlog",
    "format_presentation_file",
    "format_presentation",
]

_EDGE = re.compile(r"edge\s+(?P<src>\S+)\s*->\s*(?P<dst>\S+)\s*:(?P<label>.*)\Z")


class FormatError(ValueError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None, source: str = "<input>"):
        self.message, self.line, self.column, self.source = message, line, column, source
        where = source
        if line is not None:
            where += f":{line}"
            if column is not None:
                where += f":{column}"
        super().__init__(f"{where}: {message}")


def parse_text(text: str, source: str = "<input>") -> WlogGraph | Presentation:
    vertices: list[str] = []
    edges: list[tuple[int, int, str, str, str]] = []
    generators: list[str] = []
    relators: list[tuple[int, int, str]] = []
    kind = None

    def set_kind(k, lineno):
        nonlocal kind
        if kind is not None and kind != k:
            raise FormatError("cannot mix WLOG and presentation keywords", lineno, 1, source)
        kind = k

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        stripped = line.strip()
        if not stripped:
            continue
        col = len(line) - len(line.lstrip()) + 1
        key, sep, rest = stripped.partition(":")
        key = key.strip()
        if sep and key in ("vertices", "generators"):
            set_kind("wlog" if key == "vertices" else "presentation", lineno)
            target = vertices if key == "vertices" else generators
            for m in re.finditer(r"\S+", rest):
                name = m.group()
                ncol = col + len(key) + 1 + m.start()
                if not GENERATOR_NAME.match(name):
                    raise FormatError(f"invalid name {name!r}", lineno, ncol, source)
                if name in target:
                    raise FormatError(f"duplicate name {name!r}", lineno, ncol, source)
                target.append(name)
        elif sep and key == "relator":
            set_kind("presentation", lineno)
            relators.append((lineno, col, rest))
        elif stripped.startswith("edge"):
            set_kind("wlog", lineno)
            m = _EDGE.match(stripped)
            if not m:
                raise FormatError("expected 'edge SRC -> DST : LABEL'", lineno, col, source)
            edges.append((lineno, col, m.group("src"), m.group("dst"), m.group("label")))
        else:
            raise FormatError(f"unrecognized line {stripped!r}", lineno, col, source)

    if kind == "presentation":
        words = []
        for lineno, col, body in relators:
            try:
                words.append(parse_word(body, generators))
            except WordParseError as exc:
                raise FormatError(str(exc), lineno, col, source) from None
        return Presentation(tuple(generators), tuple(words))

    if not vertices:
        raise FormatError("no vertices declared", None, None, source)
    out = []
    for lineno, col, src, dst, label in edges:
        for end in (src, dst):
            if end not in vertices:
                raise FormatError(f"unknown vertex {end!r}", lineno, col, source)
        if not label.strip():
            raise FormatError("label must be non-empty", lineno, col, source)
        try:
            word = parse_word(label, vertices)
        except WordParseError as exc:
            raise FormatError(str(exc), lineno, col, source) from None
        out.append(WlogEdge(src, dst, word))
    return WlogGraph(tuple(vertices), tuple(out))


def parse_file(path) -> WlogGraph | Presentation:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise FormatError(f"cannot read file: {exc.strerror}", source=str(path)) from exc
    return parse_text(text, source=str(path))


def parse_wlog_file(path) -> WlogGraph:
    obj = parse_file(path)
    if not isinstance(obj, WlogGraph):
        raise FormatError("expected a WLOG file (vertices/edge lines)", source=str(path))
    return obj


def format_wlog(g: WlogGraph) -> str:
    lines = ["vertices: " + " ".join(g.vertices)]
    lines += [f"edge {e.source} -> {e.target} : {format_word(e.label)}" for e in g.edges]
    return "\n".join(lines) + "\n"


def format_presentation_file(p: Presentation) -> str:
    lines = ["generators: " + " ".join(p.generators)]
    lines += [f"relator: {format_word(r)}" for r in p.relators]
    return "\n".join(lines) + "\n"


def format_presentation(p: Presentation) -> str:
    """Display form, e.g. ``⟨a,b | ab=ba⟩``.

    Relators of WLOG shape print as ``x w=w y``; letters are concatenated
    when every generator name is a single character.
    """
    compact = all(len(g) == 1 for g in p.generators)
    eq = "=" if compact else " = "
    parts = []
    for r in p.relators:
        d = decompose_relator(r, p.generators)
        if d is None:
            parts.append(format_word(r, compact))
        else:
            lhs = Word.of(d.alpha) + d.w
            rhs = d.w + Word.of(d.beta)
            parts.append(format_word(lhs, compact) + eq + format_word(rhs, compact))
    return "⟨" + ",".join(p.generators) + " | " + ", ".join(parts) + "⟩"
