"""The polynomial representation P_kappa of the type-A double affine Hecke algebra.

Conventions (all pinned by the cyclic-vector normalization ``T_i 1 = s``):

* ``T_i f = s * s_i(f) + (s - 1/s) * (f - s_i f) / (1 - X_i / X_{i+1})``,
  so ``(T_i - s)(T_i + 1/s) = 0`` and ``T_i X_i T_i = X_{i+1}``.
* ``g`` sends ``X^b`` to ``c^(2 b_kappa) X^(b_kappa, b_1, ..., b_{kappa-1})``;
  its inverse sends ``X^a`` to ``c^(-2 a_1) X^(a_2, ..., a_kappa, a_1)``.
* ``g = T_1 ... T_{kappa-1} Y_kappa`` and ``Y_i = T_i Y_{i+1} T_i``, which
  unwinds to ``Y_i = T_{i-1}^-1 ... T_1^-1 g T_{kappa-1} ... T_i``.

Words act as left operators: the rightmost letter is applied first.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .errors import IndexRangeError, KappaMismatchError, UnsupportedLetterError
from .laurent import PolyElement, lx_div_root, lx_permute
from .scalar import HBAR, S, Scalar, c_pow, s_pow

__all__ = [
    "Letter",
    "OperatorWord",
    "PhiValue",
    "op_T",
    "op_T_inv",
    "op_g",
    "op_Y",
    "op_X",
    "apply_letter",
    "apply_word",
    "phi_char",
]

KINDS = ("T", "X", "Y", "G")


class Letter(NamedTuple):
    kind: str  # one of T, X, Y, G
    index: int | None
    exponent: int

    def __str__(self) -> str:
        name = "g" if self.kind == "G" else f"{self.kind if self.kind == 'T' else self.kind.lower()}{self.index}"
        return name if self.exponent == 1 else f"{name}^{self.exponent}"


def _check_letter(kappa: int, letter: Letter) -> None:
    kind, index, exponent = letter
    if kind not in KINDS:
        raise UnsupportedLetterError(f"unknown generator kind {kind!r}")
    if exponent == 0:
        raise ValueError("letter exponent must be nonzero")
    if kind == "G":
        if index is not None:
            raise IndexRangeError("g carries no index")
        return
    hi = kappa - 1 if kind == "T" else kappa
    if index is None or not 1 <= index <= hi:
        raise IndexRangeError(f"{kind}{index}: index outside 1..{hi} for kappa={kappa}")


@dataclass(frozen=True)
class OperatorWord:
    """A product of DAHA generators, acting on P_kappa right-to-left."""

    kappa: int
    letters: tuple = ()

    def __post_init__(self):
        if self.kappa < 1:
            raise ValueError("kappa must be positive")
        letters = tuple(Letter(*x) for x in self.letters)
        for letter in letters:
            _check_letter(self.kappa, letter)
        object.__setattr__(self, "letters", letters)

    def __mul__(self, other: "OperatorWord") -> "OperatorWord":
        if other.kappa != self.kappa:
            raise KappaMismatchError("cannot concatenate words with different kappa")
        return OperatorWord(self.kappa, self.letters + other.letters)

    def inverse(self) -> "OperatorWord":
        return OperatorWord(self.kappa, tuple(Letter(k, i, -e) for k, i, e in reversed(self.letters)))

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return " ".join(str(x) for x in self.letters) if self.letters else "1"


@dataclass(frozen=True)
class PhiValue:
    value: Scalar

    def __post_init__(self):
        md = self.value.monomial_data()
        if md is None or md[0] not in (1, -1) or md[2] != 0:
            raise ValueError(f"character value {self.value} is not of the form +-s^k")


# --------------------------------------------------------------------------
# generators

def op_T(i: int, f: PolyElement) -> PolyElement:
    """Demazure-Lusztig operator T_i."""
    if not 1 <= i < f.kappa:
        raise IndexRangeError(f"T{i}: index outside 1..{f.kappa - 1}")
    sf = lx_permute(f, i)
    return sf.scale(S) + lx_div_root(f - sf, i).scale(HBAR)


def op_T_inv(i: int, f: PolyElement) -> PolyElement:
    """T_i^-1 = T_i - (s - 1/s)."""
    return op_T(i, f) - f.scale(HBAR)


def op_g(f: PolyElement, direction: str = "forward") -> PolyElement:
    """The cyclic element g = T_1 ... T_{kappa-1} Y_kappa, or its inverse."""
    k = f.kappa
    out = {}
    if direction == "forward":
        for a, v in f.coeffs.items():
            last = a[-1]
            out[(last,) + a[:-1]] = v * c_pow(2 * last) if last else v
    elif direction == "inverse":
        for a, v in f.coeffs.items():
            first = a[0]
            out[a[1:] + (first,)] = v * c_pow(-2 * first) if first else v
    else:
        raise ValueError(f"direction must be 'forward' or 'inverse', got {direction!r}")
    return PolyElement._raw(k, out)


def op_X(i: int, f: PolyElement, exponent: int = 1) -> PolyElement:
    """Multiplication by X_i^exponent."""
    if not 1 <= i <= f.kappa:
        raise IndexRangeError(f"X{i}: index outside 1..{f.kappa}")
    out = {}
    for a, v in f.coeffs.items():
        b = list(a)
        b[i - 1] += exponent
        out[tuple(b)] = v
    return PolyElement._raw(f.kappa, out)


def op_Y(i: int, f: PolyElement, exponent: int = 1) -> PolyElement:
    """Cherednik operator Y_i (exponent +1) or its inverse (exponent -1)."""
    k = f.kappa
    if not 1 <= i <= k:
        raise IndexRangeError(f"Y{i}: index outside 1..{k}")
    if exponent == 1:
        for j in range(i, k):
            f = op_T(j, f)
        f = op_g(f, "forward")
        for j in range(1, i):
            f = op_T_inv(j, f)
        return f
    if exponent == -1:
        for j in range(i - 1, 0, -1):
            f = op_T(j, f)
        f = op_g(f, "inverse")
        for j in range(k - 1, i - 1, -1):
            f = op_T_inv(j, f)
        return f
    raise ValueError("op_Y takes exponent +1 or -1; use apply_word for powers")


def apply_letter(letter: Letter, f: PolyElement) -> PolyElement:
    kind, i, e = letter
    if kind == "X":
        return op_X(i, f, e)
    for _ in range(abs(e)):
        if kind == "T":
            f = op_T(i, f) if e > 0 else op_T_inv(i, f)
        elif kind == "Y":
            f = op_Y(i, f, 1 if e > 0 else -1)
        elif kind == "G":
            f = op_g(f, "forward" if e > 0 else "inverse")
        else:
            raise UnsupportedLetterError(f"unknown generator kind {kind!r}")
    return f


def apply_word(w: OperatorWord, f: PolyElement) -> PolyElement:
    """Act by the word on f; the rightmost letter acts first."""
    if w.kappa != f.kappa:
        raise KappaMismatchError(f"word has kappa={w.kappa}, element has kappa={f.kappa}")
    for letter in reversed(w.letters):
        f = apply_letter(letter, f)
    return f


def phi_char(w: OperatorWord | Iterable[Letter], kappa: int | None = None) -> PhiValue:
    """One-dimensional character of the affine Hecke algebra: T_i -> s, X_i -> s^(2i-1-kappa)."""
    if isinstance(w, OperatorWord):
        kappa, letters = w.kappa, w.letters
    else:
        letters = tuple(Letter(*x) for x in w)
        if kappa is None:
            raise ValueError("kappa is required for a bare letter sequence")
    power = 0
    for kind, i, e in letters:
        if kind == "T":
            power += e
        elif kind == "X":
            power += e * (2 * i - 1 - kappa)
        else:
            raise UnsupportedLetterError(f"phi is defined on T and X letters only, got {kind}")
    return PhiValue(s_pow(power))


def cyclic_vector(kappa: int) -> PolyElement:
    return PolyElement.one(kappa)


def y_scalar(i: int, kappa: int) -> Scalar:
    """Eigenvalue s^(kappa+1-2i) of Y_i on the cyclic vector."""
    return s_pow(kappa + 1 - 2 * i)

