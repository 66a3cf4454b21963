"""Exact kernels by fraction-free (Bareiss) elimination."""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Sequence


def _integer_rows(rows: Sequence[Sequence[Fraction]]) -> list[list[int]]:
    out = []
    for row in rows:
        row = [Fraction(x) for x in row]
        scale = lcm(1, *(x.denominator for x in row))
        out.append([int(x * scale) for x in row])
    return out


def echelon(rows: Sequence[Sequence[Fraction]], ncols: int) -> tuple[list[list[int]], list[int]]:
    """Fraction-free row echelon form; returns the nonzero rows and pivot columns.

    Each row is first cleared of denominators (row scaling does not change
    the row space), then eliminated with Bareiss' exact-division update.
    """
    m = _integer_rows(rows)
    for row in m:
        if len(row) != ncols:
            raise ValueError("ragged matrix")
    pivots: list[int] = []
    r = 0
    prev = 1
    for col in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][col]), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        piv = m[r][col]
        for i in range(r + 1, len(m)):
            lead = m[i][col]
            row = m[i]
            for j in range(col + 1, ncols):
                num = piv * row[j] - lead * m[r][j]
                q, rem = divmod(num, prev)
                assert rem == 0, "Bareiss division must be exact"
                row[j] = q
            row[col] = 0
            # entries left of col are already zero
        prev = piv
        pivots.append(col)
        r += 1
    return m[:r], pivots


def rank(rows: Sequence[Sequence[Fraction]], ncols: int) -> int:
    return len(echelon(rows, ncols)[1])


def nullspace(rows: Sequence[Sequence[Fraction]], ncols: int) -> list[list[Fraction]]:
    """Basis of ``{x : A x = 0}``, one vector per free column, each with a 1 there."""
    ech, pivots = echelon(rows, ncols)
    free = [j for j in range(ncols) if j not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for row, pc in zip(reversed(ech), reversed(pivots)):
            s = sum(row[j] * x[j] for j in range(pc + 1, ncols))
            x[pc] = Fraction(-s, row[pc])
        basis.append(x)
    return basis
