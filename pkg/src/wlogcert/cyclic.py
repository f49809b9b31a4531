"""Cyclic presentations ``P(n, w)`` and the WLOG circles ``C(n, w)``.

Generators are named ``x1 ... xn``; the shift sends ``x_i`` to ``x_{i+1}``
with indices read mod ``n`` in the range ``1..n``.
"""

from __future__ import annotations

import re
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .certifier import DR_CERTIFIED, certify
from .wlog import (
    Presentation,
    WlogEdge,
    WlogGraph,
    WlogRelator,
    build_presentation,
)
from .words import Letter, Word, parse_word

__all__ = [
    "CyclicParams",
    "Theorem2Params",
    "ScanRow",
    "generator_names",
    "gen_index",
    "shift",
    "power_word",
    "build_Pnw",
    "build_C",
    "theorem2_check",
    "scan_parameters",
    "soundness_counterexamples",
    "drop_relator",
    "insert_relator",
]

_XNAME = re.compile(r"x([1-9][0-9]*)\Z")


def generator_names(n: int) -> tuple[str, ...]:
    return tuple(f"x{i}" for i in range(1, n + 1))


def gen_index(name: str, n: int) -> int:
    m = _XNAME.match(name)
    if not m or not 1 <= int(m.group(1)) <= n:
        raise ValueError(f"letter {name!r} is not one of x1..x{n}")
    return int(m.group(1))


def shift(w: Word, n: int, amount: int = 1) -> Word:
    out = []
    for l in w:
        i = gen_index(l.gen, n)
        out.append(Letter(f"x{(i - 1 + amount) % n + 1}", l.sign))
    return Word(tuple(out))


@dataclass(frozen=True)
class CyclicParams:
    n: int
    w: Word

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("n must be at least 2")
        if not self.w:
            raise ValueError("w must be non-empty")
        for l in self.w:
            gen_index(l.gen, self.n)

    @classmethod
    def parse(cls, n: int, text: str) -> CyclicParams:
        return cls(n, parse_word(text, generator_names(n)))


@dataclass(frozen=True)
class Theorem2Params:
    """Parameters of the family ``w = x_j^t x_k^m``."""

    n: int
    j: int
    k: int
    t: int
    m: int

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("n must be at least 2")
        if self.t == 0 or self.m == 0:
            raise ValueError("t and m must be non-zero")
        for name, v in (("j", self.j), ("k", self.k)):
            if not 1 <= v <= self.n:
                raise ValueError(f"{name} must lie in 1..n")

    @property
    def word(self) -> Word:
        return power_word(self.j, self.t) + power_word(self.k, self.m)

    def cyclic_params(self) -> CyclicParams:
        return CyclicParams(self.n, self.word)


def power_word(i: int, e: int) -> Word:
    sign = 1 if e > 0 else -1
    return Word((Letter(f"x{i}", sign),) * abs(e))


def build_Pnw(p: CyclicParams) -> Presentation:
    return Presentation(generator_names(p.n), tuple(shift(p.w, p.n, i) for i in range(p.n)))


def build_C(p: CyclicParams) -> tuple[WlogGraph, Presentation, list[WlogRelator]]:
    names = generator_names(p.n)
    edges = tuple(
        WlogEdge(names[i], names[(i + 1) % p.n], shift(p.w, p.n, i)) for i in range(p.n)
    )
    g = WlogGraph(names, edges)
    pres, rels = build_presentation(g)
    return g, pres, rels


def theorem2_check(q: Theorem2Params) -> tuple[bool, list[str]]:
    """Arithmetic side conditions, all read as congruences mod ``n``."""
    n, j, k = q.n, q.j, q.k

    def cong(a: int, b: int) -> bool:
        return (a - b) % n == 0

    checks = [
        ("j≡k", cong(j, k)),
        ("j≡1", cong(j, 1)),
        ("k≡2", cong(k, 2)),
        ("2j-1≡k", cong(2 * j - 1, k)),
        ("j≡k-1", cong(j, k - 1)),
        ("j≡2k-2", cong(j, 2 * k - 2)),
        ("j+k≡3", cong(j + k, 3)),
        ("t=0", q.t == 0),
        ("m=0", q.m == 0),
    ]
    failed = [name for name, bad in checks if bad]
    return not failed, failed


class ScanRow(NamedTuple):
    n: int
    j: int
    k: int
    t: int
    m: int
    arithmetic: bool
    failed: tuple[str, ...]
    certificate: str | None  # verdict string, None if the certifier errored
    error: str | None = None

    def to_json(self) -> dict:
        d = self._asdict()
        d["failed"] = list(self.failed)
        return d


def _scan_one(args: tuple[int, int, int, int, int]) -> ScanRow:
    q = Theorem2Params(*args)
    ok, failed = theorem2_check(q)
    try:
        _, pres, _ = build_C(q.cyclic_params())
        verdict, err = certify(pres).verdict, None
    except Exception as exc:  # recorded per cell
        verdict, err = None, f"{type(exc).__name__}: {exc}"
    return ScanRow(*args, ok, tuple(failed), verdict, err)


def scan_parameters(
    n_range: Iterable[int],
    t_range: Iterable[int],
    m_range: Iterable[int],
    workers: int | None = None,
) -> list[ScanRow]:
    """Run the arithmetic check and the certifier side by side.

    Rows are ordered lexicographically by ``(n, j, k, t, m)`` whether or not
    the work is spread over ``workers`` processes.
    """
    ts = sorted(t for t in set(t_range) if t != 0)
    ms = sorted(m for m in set(m_range) if m != 0)
    tasks = [
        (n, j, k, t, m)
        for n in sorted(set(n_range))
        for j in range(1, n + 1)
        for k in range(1, n + 1)
        if j != k
        for t in ts
        for m in ms
    ]
    if workers and workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            return list(ex.map(_scan_one, tasks, chunksize=64))
    return [_scan_one(a) for a in tasks]


def soundness_counterexamples(rows: Iterable[ScanRow]) -> list[ScanRow]:
    """Rows where the arithmetic check passes but the certifier does not."""
    return [r for r in rows if r.arithmetic and r.certificate != DR_CERTIFIED]


def drop_relator(p: Presentation, i: int) -> Presentation:
    if not 0 <= i < len(p.relators):
        raise IndexError(f"relator index {i} out of range")
    return Presentation(p.generators, p.relators[:i] + p.relators[i + 1 :])


def insert_relator(p: Presentation, i: int, r: Word) -> Presentation:
    return Presentation(p.generators, p.relators[:i] + (r,) + p.relators[i:])
