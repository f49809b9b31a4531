"""Exact rational feasibility for ``A x <= b, x >= 0``.

Phase-I simplex on a tableau of :class:`~fractions.Fraction` with
Bland's rule, so the answer never depends on floating point.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Sequence

__all__ = ["feasible_point", "farkas_certificate", "check_farkas"]


def _as_fractions(A, b):
    rows = [[Fraction(v) for v in row] for row in A]
    rhs = [Fraction(v) for v in b]
    if len(rows) != len(rhs):
        raise ValueError("A and b have different row counts")
    widths = {len(r) for r in rows}
    if len(widths) > 1:
        raise ValueError("ragged constraint matrix")
    return rows, rhs


def feasible_point(A: Sequence[Sequence], b: Sequence, nvars: int | None = None) -> list[Fraction] | None:
    """A point with ``A x <= b`` and ``x >= 0``, or None if there is none."""
    rows, rhs = _as_fractions(A, b)
    m = len(rows)
    n = nvars if nvars is not None else (len(rows[0]) if rows else 0)
    if m == 0:
        return [Fraction(0)] * n

    # columns: x (n), slack (m), artificial (one per row with b < 0)
    negative = [i for i in range(m) if rhs[i] < 0]
    art_col = {i: n + m + r for r, i in enumerate(negative)}
    width = n + m + len(negative)
    T = []
    basis = []
    for i in range(m):
        row = [Fraction(0)] * (width + 1)
        sgn = -1 if rhs[i] < 0 else 1
        for j, v in enumerate(rows[i]):
            row[j] = sgn * v
        row[n + i] = Fraction(sgn)
        row[-1] = sgn * rhs[i]
        if i in art_col:
            row[art_col[i]] = Fraction(1)
            basis.append(art_col[i])
        else:
            basis.append(n + i)
        T.append(row)

    if negative:
        # reduced costs of min sum(artificials), expressed in the non-basic columns
        cost = [Fraction(0)] * (width + 1)
        for i in negative:
            for j in range(width + 1):
                cost[j] -= T[i][j]
        for i in negative:
            cost[art_col[i]] = Fraction(0)
        while True:
            enter = next((j for j in range(width) if cost[j] < 0), None)
            if enter is None:
                break
            leave, best = None, None
            for i in range(m):
                a = T[i][enter]
                if a > 0:
                    ratio = T[i][-1] / a
                    if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                        leave, best = i, ratio
            # phase I is bounded below by 0, so some row always qualifies
            assert leave is not None
            _pivot(T, cost, leave, enter)
            basis[leave] = enter
        if cost[-1] != 0:  # -(sum of artificials) at optimum
            return None

    x = [Fraction(0)] * n
    for i, col in enumerate(basis):
        if col < n:
            x[col] = T[i][-1]
    return x


def _pivot(T, cost, r, c):
    prow = T[r]
    p = prow[c]
    if p != 1:
        prow[:] = [v / p for v in prow]
    nz = [(j, v) for j, v in enumerate(prow) if v]
    for row in itertools.chain(T, (cost,)):
        if row is prow:
            continue
        f = row[c]
        if f:
            for j, v in nz:
                row[j] -= f * v


def farkas_certificate(A: Sequence[Sequence], b: Sequence) -> list[Fraction] | None:
    """Multipliers ``y >= 0`` with ``y A >= 0`` and ``y b <= -1``.

    Such a ``y`` exists exactly when ``A x <= b, x >= 0`` is infeasible.
    """
    rows, rhs = _as_fractions(A, b)
    m = len(rows)
    if m == 0:
        return None
    n = len(rows[0])
    dual_A = [[-rows[i][j] for i in range(m)] for j in range(n)]
    dual_b = [Fraction(0)] * n
    dual_A.append(list(rhs))
    dual_b.append(Fraction(-1))
    return feasible_point(dual_A, dual_b, nvars=m)


def check_farkas(A: Sequence[Sequence], b: Sequence, y: Sequence) -> bool:
    rows, rhs = _as_fractions(A, b)
    y = [Fraction(v) for v in y]
    if len(y) != len(rows) or any(v < 0 for v in y):
        return False
    n = len(rows[0]) if rows else 0
    if any(sum(y[i] * rows[i][j] for i in range(len(rows))) < 0 for j in range(n)):
        return False
    return sum(yi * bi for yi, bi in zip(y, rhs)) < 0
