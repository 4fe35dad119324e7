"""Nonsymmetric Macdonald polynomials as joint eigenvectors of the Y operators."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .errors import DegenerateEigenspaceError, NonInvariantSupportError
from .laurent import PolyElement
from .linalg import nullspace
from .pairing import pair_value
from .polyrep import op_Y
from .scalar import ZERO

__all__ = ["MacdonaldData", "mac_support", "mac_poly", "orthogonality_check", "dominates"]


@dataclass(frozen=True)
class MacdonaldData:
    composition: tuple
    polynomial: PolyElement
    eigenvalues: tuple
    support: tuple

    def to_json(self) -> dict:
        return {
            "composition": list(self.composition),
            "polynomial": self.polynomial.to_json(),
            "eigenvalues": [str(y) for y in self.eigenvalues],
        }


def _partial_sums(v) -> list:
    return list(itertools.accumulate(v))


def dominates(a, b) -> bool:
    """True if the decreasing rearrangement of b is dominated by that of a."""
    pa = _partial_sums(sorted(a, reverse=True))
    pb = _partial_sums(sorted(b, reverse=True))
    return pa[-1] == pb[-1] and all(y <= x for x, y in zip(pa, pb))


def mac_support(a) -> list:
    """Exponent vectors b with sum(b) == sum(a) and b+ dominated by a+.

    ``a`` comes first; the rest are ordered by decreasing rearrangement,
    then by the vector itself, both lexicographically descending.
    """
    a = tuple(a)
    lo, hi = min(a), max(a)
    rest = [
        b
        for b in itertools.product(range(lo, hi + 1), repeat=len(a))
        if b != a and sum(b) == sum(a) and dominates(a, b)
    ]
    rest.sort(key=lambda b: (tuple(sorted(b, reverse=True)), b), reverse=True)
    return [a] + rest


def _y_matrix(i: int, support: list, index: dict) -> list:
    """Columns: coordinates of Y_i X^b in the support basis."""
    cols = []
    for b in support:
        image = op_Y(i, PolyElement.monomial(b))
        col = [ZERO] * len(support)
        for m, v in image.coeffs.items():
            pos = index.get(m)
            if pos is None:
                raise NonInvariantSupportError(f"Y{i} X^{b} has the term X^{m} outside the support")
            col[pos] = v
        cols.append(col)
    return cols


@lru_cache(maxsize=None)
def _mac_poly(a: tuple) -> MacdonaldData:
    kappa = len(a)
    support = mac_support(a)
    index = {b: n for n, b in enumerate(support)}
    n = len(support)
    mats = [_y_matrix(i, support, index) for i in range(1, kappa + 1)]
    # eigenvalue forced on the leading monomial: diagonal entry at X^a
    eig = tuple(m[0][0] for m in mats)
    # joint kernel of (Y_i - eig_i), rows of the stacked system
    rows = []
    for m, y in zip(mats, eig):
        for r in range(n):
            row = [m[col][r] for col in range(n)]
            row[r] = row[r] - y
            rows.append(row)
    kernel = nullspace(rows, n)
    if len(kernel) != 1:
        raise DegenerateEigenspaceError(f"joint eigenspace for {a} has dimension {len(kernel)}")
    v = kernel[0]
    if v[0].is_zero():
        raise DegenerateEigenspaceError(f"eigenvector for {a} has no X^{a} term")
    inv = v[0].inverse()
    poly = PolyElement(kappa, {b: x * inv for b, x in zip(support, v)})
    for i, y in enumerate(eig, start=1):
        if op_Y(i, poly) != poly.scale(y):
            raise DegenerateEigenspaceError(f"E_{a} is not an eigenvector of Y{i}")
    return MacdonaldData(a, poly, eig, tuple(support))


def mac_poly(a) -> MacdonaldData:
    """Monic E_a with op_Y(i, E_a) == eigenvalues[i-1] * E_a for every i."""
    return _mac_poly(tuple(int(x) for x in a))


def orthogonality_check(a, b) -> bool:
    """a != b implies <E_a, E_b> = 0; a == b implies <E_a, E_a> != 0."""
    value = pair_value(mac_poly(a).polynomial, mac_poly(b).polynomial)
    if tuple(a) == tuple(b):
        return not value.is_zero()
    return value.is_zero()

