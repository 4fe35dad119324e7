"""Exact Gaussian elimination over Q(s, c)."""

from __future__ import annotations

from typing import Sequence

from .scalar import ONE, ZERO, Scalar

__all__ = ["rref", "nullspace", "rank"]


def _weight(x: Scalar) -> int:
    return x.n_terms()


def rref(rows: Sequence[Sequence[Scalar]], ncols: int) -> tuple[list, list]:
    """Reduced row echelon form.

    Returns ``(reduced_rows, pivot_columns)``; zero rows are dropped.  Among
    the candidate pivots of a column the one with the fewest terms is taken,
    which keeps intermediate expressions small.
    """
    work = [list(r) for r in rows if any(not x.is_zero() for x in r)]
    pivots: list = []
    done = 0
    for col in range(ncols):
        best, best_w = None, None
        for r in range(done, len(work)):
            x = work[r][col]
            if not x.is_zero():
                w = _weight(x)
                if best is None or w < best_w:
                    best, best_w = r, w
        if best is None:
            continue
        work[done], work[best] = work[best], work[done]
        prow = work[done]
        inv = prow[col].inverse()
        prow = [x * inv if not x.is_zero() else ZERO for x in prow]
        prow[col] = ONE
        work[done] = prow
        nz = [j for j in range(col, ncols) if not prow[j].is_zero()]
        for r in range(len(work)):
            if r == done:
                continue
            factor = work[r][col]
            if factor.is_zero():
                continue
            row = work[r]
            for j in nz:
                row[j] = row[j] - factor * prow[j]
        pivots.append(col)
        done += 1
        if done == len(work):
            break
    return work[:done], pivots


def rank(rows: Sequence[Sequence[Scalar]], ncols: int) -> int:
    return len(rref(rows, ncols)[1])


def nullspace(rows: Sequence[Sequence[Scalar]], ncols: int) -> list:
    """Basis of {v : rows . v = 0}, one vector per free column."""
    reduced, pivots = rref(rows, ncols)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = [ZERO] * ncols
        v[free] = ONE
        for row, p in zip(reduced, pivots):
            v[p] = -row[free]
        basis.append(v)
    return basis
