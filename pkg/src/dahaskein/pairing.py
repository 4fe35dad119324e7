"""The topological bilinear form on P_kappa and its Cherednik axioms.

``pair(f, g)`` reverses the second braid (``braid_star``), concatenates it
with the first (a product in P_kappa) and reads off the multiple of the
constant braid in the quotient.  It is linear in ``f`` and conjugate-linear
(via s -> 1/s, c -> 1/c) in ``g``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import KappaMismatchError, UnsupportedLetterError
from .laurent import PolyElement, lx_mul
from .linalg import rref
from .polyrep import op_g, op_T, op_T_inv, op_X, op_Y
from .qreduce import reduce_class
from .scalar import ONE, ZERO, Scalar, s_pow

__all__ = [
    "PairingValue",
    "braid_star",
    "pair",
    "pair_value",
    "apply_generator",
    "unitarity_check",
    "axiom_pairing_table",
]


@dataclass(frozen=True)
class PairingValue:
    value: Scalar

    def __str__(self) -> str:
        return str(self.value)


def braid_star(f: PolyElement) -> PolyElement:
    """r X^a  ->  r* X^(-a)."""
    return PolyElement._raw(f.kappa, {tuple(-x for x in a): v.star() for a, v in f.coeffs.items()})


def pair_value(f: PolyElement, g: PolyElement) -> Scalar:
    if f.kappa != g.kappa:
        raise KappaMismatchError(f"kappa mismatch: {f.kappa} vs {g.kappa}")
    return reduce_class(lx_mul(braid_star(g), f))


def pair(f: PolyElement, g: PolyElement) -> PairingValue:
    return PairingValue(pair_value(f, g))


def apply_generator(kind: str, i: int | None, f: PolyElement, inverse: bool = False) -> PolyElement:
    """Apply T_i, X_i, Y_i or g (or the inverse) to f."""
    kind = kind.upper()
    if kind == "T":
        return op_T_inv(i, f) if inverse else op_T(i, f)
    if kind == "X":
        return op_X(i, f, -1 if inverse else 1)
    if kind == "Y":
        return op_Y(i, f, -1 if inverse else 1)
    if kind == "G":
        return op_g(f, "inverse" if inverse else "forward")
    raise UnsupportedLetterError(f"unknown generator kind {kind!r}")


def unitarity_check(kind: str, i: int | None, f: PolyElement, g: PolyElement) -> bool:
    """pair(H f, g) == pair(f, H* g) with H* = H^-1 for the generators."""
    lhs = lx_mul(braid_star(g), apply_generator(kind, i, f))
    rhs = lx_mul(braid_star(apply_generator(kind, i, g, inverse=True)), f)
    # compare through one reduction of the difference; the form is linear
    return reduce_class(lhs - rhs).is_zero()


# --------------------------------------------------------------------------
# independent determination from the axioms

def axiom_pairing_table(kappa: int, window: int) -> dict:
    """Values <X^a, X^b> for a, b in [-window, window]^kappa derived from the
    axioms alone.

    X-unitarity gives <X^a, X^b> = <X^(a-b), 1>.  The unknowns
    u(e) = <X^e, 1> for e in the difference box are pinned down by

    * T-unitarity: <T_i X^e, 1> = <X^e, T_i^-1 1> = s u(e),
    * Y-unitarity: <Y_i X^e, 1> = <X^e, Y_i^-1 1> = s^(kappa+1-2i) u(e),
    * normalization u(0) = 1,

    solved degree by degree.  A ValueError is raised if the system does
    not determine every needed value uniquely.
    """
    radius = 2 * window
    needed = {}
    for d in range(-kappa * radius, kappa * radius + 1):
        needed[d] = []
    box = [e for e in itertools.product(range(-radius, radius + 1), repeat=kappa)]
    for e in box:
        needed[sum(e)].append(e)
    values: dict = {}
    for d, unknowns in needed.items():
        if not unknowns:
            continue
        index = {e: n for n, e in enumerate(unknowns)}
        n = len(unknowns)
        rows = []
        for e in unknowns:
            xe = PolyElement.monomial(e)
            images = [(op_T(i, xe), s_pow(1)) for i in range(1, kappa)]
            images += [(op_Y(i, xe), s_pow(kappa + 1 - 2 * i)) for i in range(1, kappa + 1)]
            for image, eig in images:
                row = [ZERO] * (n + 1)
                for m, v in image.coeffs.items():
                    if m not in index:
                        raise ValueError(f"window too small: X^{m} leaves the difference box")
                    row[index[m]] = row[index[m]] + v
                row[index[e]] = row[index[e]] - eig
                rows.append(row)
        if d == 0:
            norm = [ZERO] * (n + 1)
            norm[index[(0,) * kappa]] = ONE
            norm[n] = ONE
            rows.append(norm)
        # augmented matrix [A | rhs]
        reduced, pivots = rref(rows, n + 1)
        if n in pivots:
            raise ValueError(f"axioms are inconsistent in degree {d}")
        if len(pivots) != n:
            raise ValueError(f"axioms leave degree-{d} values undetermined")
        sol = {p: row[n] for row, p in zip(reduced, pivots)}
        for e in unknowns:
            values[e] = sol[index[e]]
    table = {}
    rng = range(-window, window + 1)
    for a in itertools.product(rng, repeat=kappa):
        for b in itertools.product(rng, repeat=kappa):
            table[(a, b)] = values[tuple(x - y for x, y in zip(a, b))]
    return table

