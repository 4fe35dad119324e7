"""Laurent polynomials in X_1, ..., X_kappa with coefficients in Q(s, c).

``PolyElement`` is the carrier of the polynomial representation.  Exponent
vectors are plain tuples of ints; iteration and rendering use lexicographic
order on exponent vectors, descending.
"""

from __future__ import annotations

from typing import Iterable, Mapping

from .errors import IndexRangeError, InexactDivisionError, KappaMismatchError
from .scalar import ONE, ZERO, Scalar, scalar_sum

__all__ = [
    "ExponentVector",
    "PolyElement",
    "lx_mul",
    "lx_permute",
    "lx_div_root",
    "lx_total_degree_components",
    "rotate",
    "unrotate",
    "complexity",
]

ExponentVector = tuple  # tuple[int, ...] of length kappa


def rotate(a: ExponentVector) -> ExponentVector:
    """Cyclic shift (a_2, ..., a_kappa, a_1)."""
    return tuple(a[1:]) + (a[0],)


def unrotate(a: ExponentVector) -> ExponentVector:
    """Inverse of :func:`rotate`: (a_kappa, a_1, ..., a_{kappa-1})."""
    return (a[-1],) + tuple(a[:-1])


def complexity(a: ExponentVector) -> tuple[int, int, int]:
    """The triple (sum |a_i|, max a_i, #{i : a_i = max}) compared lexicographically."""
    top = max(a)
    return sum(abs(x) for x in a), top, sum(1 for x in a if x == top)


def _as_coeff(x) -> Scalar:
    if isinstance(x, Scalar):
        return x
    return Scalar(x)


class PolyElement:
    """Element of Q(s, c)[X_1^{+-1}, ..., X_kappa^{+-1}].

    Immutable.  Supports ``+``, ``-``, ``*`` (by another element or a scalar),
    division by a scalar and integer powers of monomials.
    """

    __slots__ = ("kappa", "_c")

    def __init__(self, kappa: int, coeffs: Mapping | None = None):
        if kappa < 1:
            raise ValueError("kappa must be positive")
        self.kappa = kappa
        c: dict = {}
        for a, v in (coeffs or {}).items():
            a = tuple(int(x) for x in a)
            if len(a) != kappa:
                raise KappaMismatchError(f"exponent vector {a} does not have length {kappa}")
            v = _as_coeff(v)
            if a in c:
                v = c[a] + v
            if v.is_zero():
                c.pop(a, None)
            else:
                c[a] = v
        self._c = c

    @classmethod
    def _raw(cls, kappa: int, coeffs: dict) -> "PolyElement":
        obj = cls.__new__(cls)
        obj.kappa = kappa
        obj._c = coeffs
        return obj

    # -- constructors
    @classmethod
    def zero(cls, kappa: int) -> "PolyElement":
        return cls._raw(kappa, {})

    @classmethod
    def one(cls, kappa: int) -> "PolyElement":
        return cls._raw(kappa, {(0,) * kappa: ONE})

    @classmethod
    def monomial(cls, a: Iterable[int], coeff=ONE) -> "PolyElement":
        a = tuple(int(x) for x in a)
        coeff = _as_coeff(coeff)
        return cls._raw(len(a), {a: coeff} if not coeff.is_zero() else {})

    @classmethod
    def variable(cls, kappa: int, i: int) -> "PolyElement":
        """X_i (1-based)."""
        if not 1 <= i <= kappa:
            raise IndexRangeError(f"variable index {i} outside 1..{kappa}")
        a = [0] * kappa
        a[i - 1] = 1
        return cls.monomial(a)

    # -- access
    @property
    def coeffs(self) -> dict:
        return dict(self._c)

    def items(self):
        """(exponent vector, coefficient) pairs in descending lex order."""
        return [(a, self._c[a]) for a in sorted(self._c, reverse=True)]

    def coefficient(self, a: Iterable[int]) -> Scalar:
        return self._c.get(tuple(a), ZERO)

    def support(self) -> list:
        return sorted(self._c, reverse=True)

    def is_zero(self) -> bool:
        return not self._c

    def __len__(self) -> int:
        return len(self._c)

    def is_monomial(self) -> bool:
        return len(self._c) == 1

    def constant_value(self) -> Scalar | None:
        """The scalar if self is constant, else None."""
        if not self._c:
            return ZERO
        if len(self._c) == 1 and (0,) * self.kappa in self._c:
            return self._c[(0,) * self.kappa]
        return None

    # -- arithmetic
    def _check(self, other: "PolyElement") -> None:
        if other.kappa != self.kappa:
            raise KappaMismatchError(f"kappa mismatch: {self.kappa} vs {other.kappa}")

    def __add__(self, other) -> "PolyElement":
        if not isinstance(other, PolyElement):
            if isinstance(other, (Scalar, int)):
                other = PolyElement.one(self.kappa).scale(_as_coeff(other))
            else:
                return NotImplemented
        self._check(other)
        out = dict(self._c)
        for a, v in other._c.items():
            w = out[a] + v if a in out else v
            if w.is_zero():
                out.pop(a, None)
            else:
                out[a] = w
        return PolyElement._raw(self.kappa, out)

    __radd__ = __add__

    def __neg__(self) -> "PolyElement":
        return PolyElement._raw(self.kappa, {a: -v for a, v in self._c.items()})

    def __sub__(self, other) -> "PolyElement":
        if isinstance(other, (Scalar, int)):
            return self + (-_as_coeff(other))
        if not isinstance(other, PolyElement):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "PolyElement":
        return (-self) + other

    def scale(self, r: Scalar) -> "PolyElement":
        if r.is_zero():
            return PolyElement._raw(self.kappa, {})
        return PolyElement._raw(self.kappa, {a: v * r for a, v in self._c.items()})

    def __mul__(self, other) -> "PolyElement":
        if isinstance(other, PolyElement):
            return lx_mul(self, other)
        if isinstance(other, (Scalar, int)):
            return self.scale(_as_coeff(other))
        return NotImplemented

    def __rmul__(self, other) -> "PolyElement":
        if isinstance(other, (Scalar, int)):
            return self.scale(_as_coeff(other))
        return NotImplemented

    def __truediv__(self, other) -> "PolyElement":
        if isinstance(other, PolyElement):
            cst = other.constant_value()
            if cst is None:
                raise ArithmeticError("only division by constants is supported")
            other = cst
        if isinstance(other, (Scalar, int)):
            return self.scale(ONE / _as_coeff(other))
        return NotImplemented

    def __pow__(self, e: int) -> "PolyElement":
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            if len(self._c) != 1:
                raise ArithmeticError("negative powers are only defined for monomials")
            (a, v), = self._c.items()
            return PolyElement._raw(self.kappa, {tuple(x * e for x in a): v**e})
        out = PolyElement.one(self.kappa)
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, PolyElement):
            return self.kappa == other.kappa and self._c == other._c
        if isinstance(other, (Scalar, int)):
            return self == PolyElement.one(self.kappa).scale(_as_coeff(other))
        return NotImplemented

    __hash__ = None

    def map_coeffs(self, fn) -> "PolyElement":
        return PolyElement(self.kappa, {a: fn(v) for a, v in self._c.items()})

    def total_degree(self) -> int | None:
        """The total degree if homogeneous, else None (0 for the zero element)."""
        degs = {sum(a) for a in self._c}
        if not degs:
            return 0
        return degs.pop() if len(degs) == 1 else None

    # -- rendering
    def __str__(self) -> str:
        if not self._c:
            return "0"
        parts = []
        for a, v in self.items():
            mono = "*".join(
                f"x{i + 1}" if e == 1 else f"x{i + 1}^{e}" for i, e in enumerate(a) if e
            )
            md = v.monomial_data()
            neg = False
            if md is not None and md[0] < 0:
                neg, v = True, -v
            cs = str(v)
            if not mono:
                body = cs
            elif cs == "1":
                body = mono
            elif md is not None:
                body = f"{cs}*{mono}"
            else:
                body = f"({cs})*{mono}"
            if not parts:
                parts.append(f"-{body}" if neg else body)
            else:
                parts.append(f"- {body}" if neg else f"+ {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"PolyElement(kappa={self.kappa}, {self})"

    def to_json(self) -> list:
        return [{"exponents": list(a), "coeff": str(v)} for a, v in self.items()]


def lx_mul(f: PolyElement, g: PolyElement) -> PolyElement:
    """Product in the commutative Laurent ring."""
    f._check(g)
    if len(f._c) > len(g._c):
        f, g = g, f
    acc: dict = {}
    for a, u in f._c.items():
        for b, v in g._c.items():
            key = tuple(x + y for x, y in zip(a, b))
            acc.setdefault(key, []).append(u * v)
    out = {}
    for key, vals in acc.items():
        w = vals[0] if len(vals) == 1 else scalar_sum(vals)
        if not w.is_zero():
            out[key] = w
    return PolyElement._raw(f.kappa, out)


def _check_root_index(f: PolyElement, i: int) -> None:
    if not 1 <= i < f.kappa:
        raise IndexRangeError(f"index {i} outside 1..{f.kappa - 1}")


def lx_permute(f: PolyElement, i: int) -> PolyElement:
    """Apply the transposition s_i swapping X_i and X_{i+1}."""
    _check_root_index(f, i)
    k = i - 1
    out = {}
    for a, v in f._c.items():
        b = list(a)
        b[k], b[k + 1] = b[k + 1], b[k]
        out[tuple(b)] = v
    return PolyElement._raw(f.kappa, out)


def lx_div_root(f: PolyElement, i: int) -> PolyElement:
    """Exact quotient q with q * (1 - X_i / X_{i+1}) == f.

    Terms are grouped by the exponents outside positions i, i+1 and by
    a_i + a_{i+1}; inside a group the element is a Laurent polynomial in
    u = X_i / X_{i+1} and division by (1 - u) is a running sum.
    """
    _check_root_index(f, i)
    k = i - 1
    groups: dict = {}
    for a, v in f._c.items():
        key = (a[:k], a[k] + a[k + 1], a[k + 2:])
        groups.setdefault(key, {})[a[k]] = v
    out: dict = {}
    remainder: dict = {}
    for (head, d, tail), series in groups.items():
        lo, hi = min(series), max(series)
        run = ZERO
        for e in range(lo, hi):
            if e in series:
                run = run + series[e]
            if not run.is_zero():
                out[head + (e, d - e) + tail] = run
        run = run + series[hi]
        if not run.is_zero():
            remainder[head + (0, d) + tail] = run
    if remainder:
        rem = PolyElement._raw(f.kappa, remainder)
        raise InexactDivisionError(
            f"not divisible by (1 - x{i}/x{i + 1}); remainder {rem}", remainder=rem
        )
    return PolyElement._raw(f.kappa, out)


def lx_total_degree_components(f: PolyElement) -> dict:
    """Split f into homogeneous components keyed by total degree."""
    parts: dict = {}
    for a, v in f._c.items():
        parts.setdefault(sum(a), {})[a] = v
    if not parts:
        return {0: PolyElement.zero(f.kappa)}
    return {d: PolyElement._raw(f.kappa, parts[d]) for d in sorted(parts)}
