"""Command line interface: ``wlogcert SUBCOMMAND ...``.

Exit codes
  certify       0 DR_certified, 1 rejected, 2 not_applicable
  weight-test   0 pass, 1 fail, 3 inconclusive
  cyclic check  0 pass, 1 fail
  cyclic scan   0 no soundness counterexample, 1 otherwise
  gauss-bonnet  0 identity holds, 1 it does not
  any           64 usage error, 65 unreadable or malformed input
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field

from . import certifier, cyclic
from .curvature import diagram as dg
from .curvature.link import weight_test
from .formats import (
    FormatError,
    format_presentation,
    format_presentation_file,
    format_wlog,
    parse_file,
    parse_wlog_file,
)
from .wlog import WlogGraph, build_presentation, decompose_relator, subdivide
from .words import WordParseError, format_word

EX_USAGE = 64
EX_DATAERR = 65

CERTIFY_CODES = {certifier.DR_CERTIFIED: 0, certifier.REJECTED: 1, certifier.NOT_APPLICABLE: 2}
WEIGHT_CODES = {"pass": 0, "fail": 1, "inconclusive": 3}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EX_USAGE, f"{self.prog}: error: {message}\n")


@dataclass
class RunConfig:
    subcommand: str
    inputs: list[str] = field(default_factory=list)
    output: str = "text"
    piece_matching: str = "cyclic"
    cycle_cap: int = 100_000
    method: str = "separation"
    names: list[str] | None = None
    print_presentation: bool = False
    n: int | None = None
    word: str | None = None
    plain: bool = False
    j: int | None = None
    k: int | None = None
    t: int | None = None
    m: int | None = None
    n_range: range | None = None
    t_range: range | None = None
    m_range: range | None = None
    workers: int | None = None


def dump_json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def _color_enabled(stream) -> bool:
    return os.environ.get("WLOGCERT_COLOR", "1") != "0" and stream.isatty()


def _paint(text: str, good: bool, stream=None) -> str:
    stream = stream or sys.stdout
    if not _color_enabled(stream):
        return text
    return f"\033[{32 if good else 31}m{text}\033[0m"


def parse_range(text: str) -> range:
    """``"A..B"`` (inclusive) or a single integer."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            lo, hi = int(lo), int(hi)
        else:
            lo = hi = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad range {text!r}, expected A..B") from None
    if hi < lo:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return range(lo, hi + 1)


def _names(text: str) -> list[str]:
    return [s for s in text.replace(",", " ").split() if s]


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="wlogcert", description="WLOG presentations and DR certificates")
    sub = p.add_subparsers(dest="subcommand", required=True, parser_class=_Parser)

    c = sub.add_parser("certify", help="certify a WLOG or presentation file")
    c.add_argument("file")
    c.add_argument("--json", action="store_true")
    c.add_argument("--piece-matching", choices=certifier.PIECE_MODES, default="cyclic")

    s = sub.add_parser("subdivide", help="subdivide a WLOG into a LOG")
    s.add_argument("file")
    s.add_argument("--names", type=_names, help="fresh vertex names, comma separated")
    s.add_argument("--presentation", action="store_true", help="print the presentation instead")

    pr = sub.add_parser("present", help="print the presentation of a file")
    pr.add_argument("file")

    cy = sub.add_parser("cyclic", help="cyclic presentations")
    csub = cy.add_subparsers(dest="cyclic_command", required=True, parser_class=_Parser)
    g = csub.add_parser("gen", help="emit C(n, w) as a WLOG file")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--w", required=True)
    g.add_argument("--plain", action="store_true", help="emit P(n, w) instead")
    g.add_argument("--json", action="store_true")
    ch = csub.add_parser("check", help="arithmetic check for w = x_j^t x_k^m")
    for name in ("n", "j", "k", "t", "m"):
        ch.add_argument(f"--{name}", type=int, required=True)
    ch.add_argument("--json", action="store_true")
    sc = csub.add_parser("scan", help="scan the x_j^t x_k^m family")
    sc.add_argument("--n", type=parse_range, required=True)
    sc.add_argument("--t", type=parse_range, default=parse_range("-2..2"))
    sc.add_argument("--m", type=parse_range, default=parse_range("-2..2"))
    sc.add_argument("--workers", type=int)
    sc.add_argument("--json", action="store_true")

    w = sub.add_parser("weight-test", help="conservative weight test")
    w.add_argument("file")
    w.add_argument("--cycle-cap", type=int, default=100_000)
    w.add_argument("--method", choices=("separation", "enumerate"), default="separation")
    w.add_argument("--json", action="store_true")

    gb = sub.add_parser("gauss-bonnet", help="check the curvature identity")
    gb.add_argument("diagram")
    gb.add_argument("weights")
    gb.add_argument("--json", action="store_true")
    return p


def _fix_negative_ranges(argv: list[str]) -> list[str]:
    # let "--t -2..2" through; argparse would read "-2..2" as an option
    out = []
    i = 0
    while i < len(argv):
        a = argv[i]
        nxt = argv[i + 1] if i + 1 < len(argv) else ""
        if a in ("--t", "--m", "--n") and nxt.startswith("-") and not nxt.startswith("--"):
            out.append(f"{a}={argv[i + 1]}")
            i += 2
            continue
        out.append(a)
        i += 1
    return out


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    sc = ns.subcommand
    cfg = RunConfig(sc, output="json" if getattr(ns, "json", False) else "text")
    if sc == "cyclic":
        cfg.subcommand = f"cyclic {ns.cyclic_command}"
        if ns.cyclic_command == "gen":
            cfg.n, cfg.word, cfg.plain = ns.n, ns.w, ns.plain
        elif ns.cyclic_command == "check":
            cfg.n, cfg.j, cfg.k, cfg.t, cfg.m = ns.n, ns.j, ns.k, ns.t, ns.m
        else:
            cfg.n_range, cfg.t_range, cfg.m_range, cfg.workers = ns.n, ns.t, ns.m, ns.workers
    elif sc == "gauss-bonnet":
        cfg.inputs = [ns.diagram, ns.weights]
    else:
        cfg.inputs = [ns.file]
        if sc == "certify":
            cfg.piece_matching = ns.piece_matching
        elif sc == "subdivide":
            cfg.names, cfg.print_presentation = ns.names, ns.presentation
        elif sc == "weight-test":
            cfg.cycle_cap, cfg.method = ns.cycle_cap, ns.method
    return cfg


# -- subcommands --------------------------------------------------------------


def _print_reports(reports, out):
    for rep in reports:
        mark = _paint("[ok]  ", True) if rep.holds else _paint("[FAIL]", False)
        out.write(f"  {mark} {rep.condition}\n")
        for e in rep.evidence:
            out.write(f"         relator {e.relator} position {e.position} {e.orientation}: {e.word}\n")


def _certify(cfg: RunConfig, out) -> int:
    obj = parse_file(cfg.inputs[0])
    if cfg.piece_matching != "cyclic":
        # experimental mode: condition reports only, never a certificate
        if isinstance(obj, WlogGraph):
            graph, (_, rels) = obj, build_presentation(obj)
        else:
            graph = None
            cert = certifier.certify(obj)
            if cert.verdict == certifier.NOT_APPLICABLE:
                out.write(dump_json(cert.to_json()) if cfg.output == "json" else f"verdict: not_applicable\n  {cert.explanation}\n")
                return 2
            rels = [decompose_relator(r, obj.generators) for r in obj.relators]
        reports = certifier.check_hypotheses(rels, graph, piece_matching=cfg.piece_matching)
        if cfg.output == "json":
            out.write(dump_json({"piece_matching": cfg.piece_matching, "reports": [r.to_json() for r in reports]}))
        else:
            out.write(f"piece matching: {cfg.piece_matching} (experimental, no certificate)\n")
            _print_reports(reports, out)
        return 0 if all(r.holds for r in reports) else 1

    cert = certifier.certify(obj)
    if cfg.output == "json":
        out.write(dump_json(cert.to_json()))
    else:
        out.write(f"verdict: {_paint(cert.verdict, cert.certified)} ({cert.theorem})\n")
        out.write(f"digest: {cert.digest}\n")
        if cert.explanation:
            out.write(f"  {cert.explanation}\n")
        _print_reports(cert.reports, out)
    return CERTIFY_CODES[cert.verdict]


def _subdivide(cfg: RunConfig, out) -> int:
    g = parse_wlog_file(cfg.inputs[0])
    try:
        sub = subdivide(g, cfg.names)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if cfg.print_presentation:
        out.write(format_presentation(build_presentation(sub)[0]) + "\n")
    else:
        out.write(format_wlog(sub))
    return 0


def _present(cfg: RunConfig, out) -> int:
    obj = parse_file(cfg.inputs[0])
    pres = build_presentation(obj)[0] if isinstance(obj, WlogGraph) else obj
    out.write(format_presentation(pres) + "\n")
    return 0


def _cyclic_gen(cfg: RunConfig, out) -> int:
    try:
        params = cyclic.CyclicParams.parse(cfg.n, cfg.word)
    except WordParseError as exc:
        raise FormatError(str(exc), source="--w") from None
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if cfg.plain:
        pres = cyclic.build_Pnw(params)
        text = format_presentation_file(pres)
    else:
        g, pres, _ = cyclic.build_C(params)
        text = format_wlog(g)
    if cfg.output == "json":
        out.write(dump_json({"generators": list(pres.generators), "relators": [format_word(r) for r in pres.relators]}))
    else:
        out.write(text)
    return 0


def _cyclic_check(cfg: RunConfig, out) -> int:
    try:
        q = cyclic.Theorem2Params(cfg.n, cfg.j, cfg.k, cfg.t, cfg.m)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    ok, failed = cyclic.theorem2_check(q)
    if cfg.output == "json":
        out.write(dump_json({"params": {"n": q.n, "j": q.j, "k": q.k, "t": q.t, "m": q.m}, "pass": ok, "failed": failed}))
    else:
        word = format_word(q.word)
        out.write(f"C({q.n}, {word}): {_paint('pass', True) if ok else _paint('fail', False)}\n")
        for name in failed:
            out.write(f"  violated: {name} (mod {q.n})\n")
    return 0 if ok else 1


def _cyclic_scan(cfg: RunConfig, out) -> int:
    if cfg.n_range[0] < 2:
        raise UsageError("n must be at least 2")
    rows = cyclic.scan_parameters(cfg.n_range, cfg.t_range, cfg.m_range, workers=cfg.workers)
    bad = cyclic.soundness_counterexamples(rows)
    if cfg.output == "json":
        out.write(dump_json({"rows": [r.to_json() for r in rows], "counterexamples": len(bad)}))
    else:
        out.write("n j k t m  arithmetic  certifier\n")
        for r in rows:
            arith = "pass" if r.arithmetic else "fail {" + ", ".join(r.failed) + "}"
            out.write(f"{r.n} {r.j} {r.k} {r.t} {r.m}  {arith}  {r.certificate or r.error}\n")
        out.write(f"rows: {len(rows)}, arithmetic pass without certificate: {len(bad)}\n")
    return 0 if not bad else 1


def _weight_test(cfg: RunConfig, out) -> int:
    obj = parse_file(cfg.inputs[0])
    pres = build_presentation(obj)[0] if isinstance(obj, WlogGraph) else obj
    try:
        res = weight_test(pres, cycle_cap=cfg.cycle_cap, method=cfg.method)
    except ValueError as exc:
        raise FormatError(str(exc), source=cfg.inputs[0]) from None
    if cfg.output == "json":
        doc = res.to_json()
        doc["encoding"] = "non-negative corner weights, simple link cycles"
        out.write(dump_json(doc))
    else:
        out.write(f"weight test (non-negative, simple cycles): {_paint(res.status, res.passed)}\n")
        if res.reason:
            out.write(f"  {res.reason}\n")
        if res.weights is not None:
            for c, w in sorted(res.weights.items()):
                out.write(f"  relator {c.relator} corner {c.position}: {w}\n")
        if res.multipliers is not None:
            out.write(f"  infeasible subsystem: {len(pres.relators)} relator rows, {len(res.cycles)} cycle rows\n")
    return WEIGHT_CODES[res.status]


def _gauss_bonnet(cfg: RunConfig, out) -> int:
    diag_path, w_path = cfg.inputs
    try:
        d = dg.Diagram.load(diag_path)
        with open(w_path, encoding="utf-8") as fh:
            weights = dg.weights_from_json(json.load(fh))
    except OSError as exc:
        raise FormatError(f"cannot read file: {exc.strerror}", source=exc.filename or "") from None
    except (json.JSONDecodeError, dg.DiagramError, KeyError) as exc:
        raise FormatError(str(exc)) from None
    if not d.is_closed:
        problems = d.problems()
        if cfg.output == "json":
            out.write(dump_json({"holds": False, "problems": problems}))
        else:
            out.write("not a closed surface:\n" + "".join(f"  {p}\n" for p in problems))
        return 1
    try:
        rep = dg.curvatures(d, weights)
    except dg.DiagramError as exc:
        raise FormatError(str(exc), source=w_path) from None
    holds = rep.total == 2 * rep.euler_characteristic
    if cfg.output == "json":
        out.write(dump_json({
            "holds": holds,
            "total": str(rep.total),
            "euler_characteristic": rep.euler_characteristic,
            "vertex_curvature": [str(k) for k in rep.vertex],
            "face_curvature": [str(k) for k in rep.face],
        }))
    else:
        out.write(f"total curvature {rep.total}, 2*chi = {2 * rep.euler_characteristic}: "
                  f"{_paint('holds', True) if holds else _paint('violated', False)}\n")
    return 0 if holds else 1


HANDLERS = {
    "certify": _certify,
    "subdivide": _subdivide,
    "present": _present,
    "cyclic gen": _cyclic_gen,
    "cyclic check": _cyclic_check,
    "cyclic scan": _cyclic_scan,
    "weight-test": _weight_test,
    "gauss-bonnet": _gauss_bonnet,
}


def run(cfg: RunConfig, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        return HANDLERS[cfg.subcommand](cfg, out)
    except FormatError as exc:
        err.write(f"wlogcert: {exc}\n")
        return EX_DATAERR
    except UsageError as exc:
        err.write(f"wlogcert: {exc}\n")
        return EX_USAGE


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        ns = build_parser().parse_args(_fix_negative_ranges(argv))
    except SystemExit as exc:
        return int(exc.code or 0) if exc.code != 2 else EX_USAGE
    return run(config_from_args(ns))


if __name__ == "__main__":
    sys.exit(main())
