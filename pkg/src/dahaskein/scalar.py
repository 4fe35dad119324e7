"""Exact arithmetic in the rational function field Q(s, c).

Elements are stored as ``numerator / denominator`` where the numerator is a
Laurent polynomial in ``s, c`` with rational coefficients and the denominator
is a primitive integer polynomial (no negative exponents, not divisible by
``s`` or ``c``, coefficient gcd 1) whose leading coefficient under
lexicographic order on ``(s-exponent, c-exponent)`` is positive.  Numerator
and denominator share no nonconstant factor.  These rules leave no freedom,
so equality is a plain comparison of term tables.  A denominator with a
single term is always exactly 1.

The gcd works in Z[s][c]: polynomials are viewed as univariate in ``c`` with
coefficients in Z[s], contents are taken in Z[s], and a primitive
polynomial remainder sequence keeps coefficient growth in check.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as _igcd
from math import lcm as _ilcm
from typing import Iterable, Mapping

__all__ = [
    "BiLaurent",
    "Scalar",
    "ZERO",
    "ONE",
    "S",
    "C",
    "HBAR",
    "s_pow",
    "c_pow",
    "monomial",
    "scalar_arith",
    "scalar_star",
    "scalar_is_zero",
    "scalar_sum",
    "poly_gcd",
]

_UNIT = {(0, 0): 1}


# --------------------------------------------------------------------------
# dict-level helpers; a "poly" here is a dict {(i, j): coefficient}

def _padd(a: dict, b: dict) -> dict:
    if len(a) < len(b):
        a, b = b, a
    out = dict(a)
    for k, v in b.items():
        w = out.get(k, 0) + v
        if w:
            out[k] = w
        else:
            out.pop(k, None)
    return out


def _psub(a: dict, b: dict) -> dict:
    out = dict(a)
    for k, v in b.items():
        w = out.get(k, 0) - v
        if w:
            out[k] = w
        else:
            out.pop(k, None)
    return out


def _pmul(a: dict, b: dict) -> dict:
    if len(a) > len(b):
        a, b = b, a
    out: dict = {}
    for (i1, j1), v1 in a.items():
        for (i2, j2), v2 in b.items():
            k = (i1 + i2, j1 + j2)
            out[k] = out.get(k, 0) + v1 * v2
    return {k: v for k, v in out.items() if v}


def _pscale(a: dict, k) -> dict:
    if not k:
        return {}
    return {m: v * k for m, v in a.items()}


def _pshift(a: dict, di: int, dj: int) -> dict:
    if not di and not dj:
        return a
    return {(i + di, j + dj): v for (i, j), v in a.items()}


def _pmin(a: dict) -> tuple[int, int]:
    return min(i for i, _ in a), min(j for _, j in a)


def _exact_div(a: dict, b: dict) -> dict | None:
    """Quotient of a by b in Z[s, c] if b divides a exactly, else None."""
    lb = max(b)
    cb = b[lb]
    q: dict = {}
    r = dict(a)
    while r:
        lr = max(r)
        mi, mj = lr[0] - lb[0], lr[1] - lb[1]
        if mi < 0 or mj < 0:
            return None
        coef, rem = divmod(r[lr], cb)
        if rem:
            return None
        q[(mi, mj)] = coef
        for (i, j), v in b.items():
            key = (i + mi, j + mj)
            w = r.get(key, 0) - coef * v
            if w:
                r[key] = w
            else:
                r.pop(key, None)
    return q


# ---- univariate Z[s], dense lists low -> high, no trailing zeros

def _zs_trim(p: list) -> list:
    while p and not p[-1]:
        p.pop()
    return p


def _zs_sub(a: list, b: list) -> list:
    n = max(len(a), len(b))
    out = [(a[k] if k < len(a) else 0) - (b[k] if k < len(b) else 0) for k in range(n)]
    return _zs_trim(out)


def _zs_mul(a: list, b: list) -> list:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _zs_trim(out)


def _zs_content(p: list) -> int:
    g = 0
    for x in p:
        g = _igcd(g, x)
        if g == 1:
            break
    return g


def _zs_divexact(a: list, b: list) -> list:
    a = list(a)
    db = len(b) - 1
    lb = b[-1]
    q = [0] * (len(a) - db) if len(a) > db else []
    while len(a) > db and a:
        shift = len(a) - 1 - db
        coef, rem = divmod(a[-1], lb)
        if rem:
            raise ArithmeticError("inexact division in Z[s]")
        q[shift] = coef
        for k, y in enumerate(b):
            a[k + shift] -= coef * y
        _zs_trim(a)
    if a:
        raise ArithmeticError("inexact division in Z[s]")
    return _zs_trim(q)


def _zs_prem(a: list, b: list) -> list:
    r = list(a)
    n = len(b)
    lb = b[-1]
    while len(r) >= n:
        lr = r[-1]
        shift = len(r) - n
        r = [lb * x for x in r]
        for k, y in enumerate(b):
            r[k + shift] -= lr * y
        _zs_trim(r)
    return r


def _zs_primitive(p: list) -> list:
    if not p:
        return p
    g = _zs_content(p)
    if p[-1] < 0:
        g = -g
    return [x // g for x in p] if g != 1 else p


def _zs_gcd(a: list, b: list) -> list:
    if not a:
        return _zs_normsign(b)
    if not b:
        return _zs_normsign(a)
    g = _igcd(_zs_content(a), _zs_content(b))
    if len(a) == 1 or len(b) == 1 or _fp_coprime([x % _P for x in a], [x % _P for x in b]):
        return [g]
    pa, pb = _zs_primitive(a), _zs_primitive(b)
    if len(pa) < len(pb):
        pa, pb = pb, pa
    while pb:
        r = _zs_prem(pa, pb)
        pa, pb = pb, _zs_primitive(r)
    if len(pa) == 1:
        return [g]
    return [g * x for x in _zs_primitive(pa)]


# ---- modular coprimality test over F_p

_P = (1 << 61) - 1


def _fp_trim(p: list) -> list:
    while p and not p[-1]:
        p.pop()
    return p


def _fp_coprime(a: list, b: list) -> bool:
    """True if the images mod p (same degree as over Z) are coprime.

    A False answer is inconclusive.  When the leading coefficients survive
    reduction, a common factor over Z would survive with positive degree.
    """
    if not a or not b or not a[-1] or not b[-1]:
        return False
    a, b = _fp_trim(list(a)), _fp_trim(list(b))
    while b:
        inv = pow(b[-1], _P - 2, _P)
        while len(a) >= len(b):
            f = a[-1] * inv % _P
            shift = len(a) - len(b)
            for k, y in enumerate(b):
                a[k + shift] = (a[k + shift] - f * y) % _P
            _fp_trim(a)
        a, b = b, a
    return len(a) == 1


def _zs_eval(p: list, x: int) -> int:
    v = 0
    for coef in reversed(p):
        v = (v * x + coef) % _P
    return v


def _sc_coprime_in_c(a: list, b: list) -> bool:
    """Sufficient test that gcd(a, b) has c-degree 0."""
    for x in (1_000_003, 2_718_281, 3_141_592_653):
        ea = [_zs_eval(row, x) for row in a]
        eb = [_zs_eval(row, x) for row in b]
        if ea[-1] and eb[-1]:
            return _fp_coprime(ea, eb)
    return False


def _zs_normsign(p: list) -> list:
    return [-x for x in p] if p and p[-1] < 0 else list(p)


# ---- Z[s][c]: list indexed by c-degree of Z[s] dense lists

def _to_sc(p: dict) -> list:
    dc = max(j for _, j in p)
    out: list = [[] for _ in range(dc + 1)]
    for (i, j), v in p.items():
        row = out[j]
        if len(row) <= i:
            row.extend([0] * (i + 1 - len(row)))
        row[i] = v
    return out


def _from_sc(a: list) -> dict:
    return {(i, j): v for j, row in enumerate(a) for i, v in enumerate(row) if v}


def _sc_trim(a: list) -> list:
    while a and not a[-1]:
        a.pop()
    return a


def _sc_content(a: list) -> list:
    g: list = []
    for row in a:
        if row:
            g = _zs_gcd(g, row)
            if len(g) == 1 and g[0] == 1:
                break
    return g


def _sc_primitive(a: list) -> list:
    if not a:
        return a
    g = _sc_content(a)
    if len(g) == 1 and g[0] == 1:
        return a
    return [_zs_divexact(row, g) if row else [] for row in a]


def _sc_prem(a: list, b: list) -> list:
    r = [list(x) for x in a]
    n = len(b)
    lb = b[-1]
    while len(r) >= n:
        lr = r[-1]
        shift = len(r) - n
        r = [_zs_mul(lb, x) for x in r]
        for k, y in enumerate(b):
            r[k + shift] = _zs_sub(r[k + shift], _zs_mul(lr, y))
        _sc_trim(r)
    return r


def _sc_prem_exact(a: list, b: list) -> list:
    """lc(b)^(deg a - deg b + 1) * a  mod  b."""
    r = [list(x) for x in a]
    n = len(b)
    lb = b[-1]
    steps = len(a) - n + 1
    while len(r) >= n:
        lr = r[-1]
        shift = len(r) - n
        r = [_zs_mul(lb, x) for x in r]
        for k, y in enumerate(b):
            r[k + shift] = _zs_sub(r[k + shift], _zs_mul(lr, y))
        _sc_trim(r)
        steps -= 1
    if steps and r:
        f = _zs_pow(lb, steps)
        r = [_zs_mul(f, x) for x in r]
    return r


def _normsign(p: dict) -> dict:
    return _pscale(p, -1) if p[max(p)] < 0 else p


def poly_gcd(a: Mapping, b: Mapping) -> dict:
    """Gcd in Z[s, c] of two polynomials given as ``{(i, j): int}`` tables.

    Exponents must be nonnegative.  The result has positive leading
    coefficient; gcd(0, 0) is 0 (the empty table).
    """
    a, b = dict(a), dict(b)
    if not a:
        return _normsign(b) if b else {}
    if not b:
        return _normsign(a)
    # monomial factors
    ai, aj = _pmin(a)
    bi, bj = _pmin(b)
    mi, mj = min(ai, bi), min(aj, bj)
    a, b = _pshift(a, -ai, -aj), _pshift(b, -bi, -bj)
    if len(a) == 1 or len(b) == 1:
        g = _igcd(_zs_content(list(a.values())), _zs_content(list(b.values())))
        return {(mi, mj): g}
    A, B = _to_sc(a), _to_sc(b)
    cg = _zs_gcd(_sc_content(A), _sc_content(B))
    g = {(i, 0): v for i, v in enumerate(cg) if v}
    if len(A) > 1 and len(B) > 1 and not _sc_coprime_in_c(A, B):
        pg = _sc_subresultant_gcd(_sc_primitive(A), _sc_primitive(B))
        if len(pg) > 1:
            g = _pmul(_from_sc(pg), g)
    return _pshift(_normsign(g), mi, mj)


def _zs_pow(p: list, e: int) -> list:
    out = [1]
    for _ in range(e):
        out = _zs_mul(out, p)
    return out


def _sc_subresultant_gcd(a: list, b: list) -> list:
    """Primitive gcd of two primitive polynomials in Z[s][c].

    Subresultant PRS: every pseudo-remainder is divided by a known factor
    (g h^delta), which keeps coefficients in check without computing a
    content in Z[s] at every step.
    """
    if len(a) < len(b):
        a, b = b, a
    g, h = [1], [1]
    while True:
        delta = len(a) - len(b)
        r = _sc_prem_exact(a, b)
        if not r:
            return _sc_primitive(b)
        if len(r) == 1:
            return [[1]]
        div = _zs_mul(g, _zs_pow(h, delta))
        a, b = b, [_zs_divexact(row, div) if row else [] for row in r]
        g = a[-1]
        if delta == 0:
            continue
        # h = g^delta / h^(delta - 1)
        h = _zs_divexact(_zs_pow(g, delta), _zs_pow(h, delta - 1)) if delta > 1 else g


def _integralize(p: dict) -> tuple[dict, int]:
    """Return (L * p, L) with L the lcm of coefficient denominators."""
    dens = [v.denominator for v in p.values() if type(v) is Fraction]
    if not dens:
        return p, 1
    m = _ilcm(*dens)
    return {k: int(v * m) for k, v in p.items()}, m


def _divide_coeffs(p: dict, k) -> dict:
    if k == 1:
        return p
    if k == -1:
        return _pscale(p, -1)
    return {m: _norm_coeff(Fraction(v) / k) for m, v in p.items()}


def _canon(num: dict, den: dict) -> tuple[dict, dict]:
    if not num:
        return {}, _UNIT
    if not den:
        raise ZeroDivisionError("division by zero in Q(s, c)")
    num, ln = _integralize(num)
    den, ld = _integralize(den)
    # num/den scaled by ld/ln; fold that factor back in at the end
    di, dj = _pmin(den)
    if di or dj:
        den = _pshift(den, -di, -dj)
        num = _pshift(num, -di, -dj)
    if len(den) > 1:
        ni, nj = _pmin(num)
        p = _pshift(num, -ni, -nj)
        g = poly_gcd(p, den)
        if len(g) != 1 or g.get((0, 0)) != 1:
            p = _exact_div(p, g)
            den = _exact_div(den, g)
        num = _pshift(p, ni, nj)
    # primitive denominator with positive leading coefficient
    k = _zs_content(list(den.values()))
    if den[max(den)] < 0:
        k = -k
    if k != 1:
        den = {m: v // k for m, v in den.items()}
    factor = Fraction(ld, ln * k)
    if factor != 1:
        num = {m: _norm_coeff(v * factor) for m, v in num.items()}
    return num, den


# --------------------------------------------------------------------------
# rendering

def _render_exp(name: str, e: int) -> str:
    if e == 1:
        return name
    return f"{name}^{e}"


def _render_terms(terms: Mapping) -> str:
    if not terms:
        return "0"
    parts = []
    for (i, j) in sorted(terms, reverse=True):
        v = terms[(i, j)]
        factors = []
        if i:
            factors.append(_render_exp("s", i))
        if j:
            factors.append(_render_exp("c", j))
        mag = -v if v < 0 else v
        if not factors:
            body = str(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = f"{mag}*" + "*".join(factors)
        if not parts:
            parts.append(f"-{body}" if v < 0 else body)
        else:
            parts.append(f"- {body}" if v < 0 else f"+ {body}")
    return " ".join(parts)


def _norm_coeff(v):
    if type(v) is Fraction and v.denominator == 1:
        return v.numerator
    return v


# --------------------------------------------------------------------------
# public types

class BiLaurent:
    """Laurent polynomial in ``s, c`` with rational coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping | None = None):
        t: dict = {}
        for (i, j), v in (terms or {}).items():
            if not isinstance(v, (int, Fraction)):
                v = Fraction(v)
            key = (int(i), int(j))
            t[key] = t.get(key, 0) + v
        self._terms = {k: _norm_coeff(v) for k, v in t.items() if v}
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "BiLaurent":
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __add__(self, other: "BiLaurent") -> "BiLaurent":
        return BiLaurent._raw(_padd(self._terms, other._terms))

    def __sub__(self, other: "BiLaurent") -> "BiLaurent":
        return BiLaurent._raw(_psub(self._terms, other._terms))

    def __mul__(self, other: "BiLaurent") -> "BiLaurent":
        return BiLaurent._raw(_pmul(self._terms, other._terms))

    def __neg__(self) -> "BiLaurent":
        return BiLaurent._raw(_pscale(self._terms, -1))

    def __eq__(self, other) -> bool:
        if not isinstance(other, BiLaurent):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def star(self) -> "BiLaurent":
        return BiLaurent._raw({(-i, -j): v for (i, j), v in self._terms.items()})

    def __str__(self) -> str:
        return _render_terms(self._terms)

    def __repr__(self) -> str:
        return f"BiLaurent({self})"


class Scalar:
    """Element of Q(s, c) in canonical reduced form (see module docstring).

    Instances are immutable; arithmetic operators return new instances.
    Plain ``int`` and ``Fraction`` operands are coerced.
    """

    __slots__ = ("_n", "_d", "_hash")

    def __init__(self, numerator=0, denominator=None):
        n = _coerce_terms(numerator)
        d = _UNIT if denominator is None else _coerce_terms(denominator)
        self._n, self._d = _canon(n, d)
        self._hash = None

    @classmethod
    def _make(cls, n: dict, d: dict) -> "Scalar":
        obj = cls.__new__(cls)
        obj._n = n
        obj._d = d
        obj._hash = None
        return obj

    @classmethod
    def _from_raw(cls, n: dict, d: dict) -> "Scalar":
        return cls._make(*_canon(n, d))

    # -- accessors
    @property
    def numerator(self) -> BiLaurent:
        return BiLaurent._raw(dict(self._n))

    @property
    def denominator(self) -> BiLaurent:
        return BiLaurent._raw(dict(self._d))

    def is_zero(self) -> bool:
        return not self._n

    def is_laurent(self) -> bool:
        """True when the denominator is 1."""
        return len(self._d) == 1

    def monomial_data(self) -> tuple[int, int, int] | None:
        """``(coeff, i, j)`` when self == coeff * s^i * c^j, else None."""
        if len(self._d) == 1 and len(self._n) == 1:
            ((i, j), v), = self._n.items()
            return v, i, j
        return None

    # -- arithmetic
    def __add__(self, other) -> "Scalar":
        other = _as_scalar(other)
        if other is NotImplemented:
            return other
        return _add(self, other)

    __radd__ = __add__

    def __sub__(self, other) -> "Scalar":
        other = _as_scalar(other)
        if other is NotImplemented:
            return other
        return _add(self, -other)

    def __rsub__(self, other) -> "Scalar":
        other = _as_scalar(other)
        if other is NotImplemented:
            return other
        return _add(other, -self)

    def __neg__(self) -> "Scalar":
        return Scalar._make(_pscale(self._n, -1), self._d)

    def __pos__(self) -> "Scalar":
        return self

    def __mul__(self, other) -> "Scalar":
        other = _as_scalar(other)
        if other is NotImplemented:
            return other
        return _mul(self, other)

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        if not self._n:
            raise ZeroDivisionError("division by zero in Q(s, c)")
        # numerator = s^i c^j * k * P with P primitive and coprime to den
        ni, nj = _pmin(self._n)
        p, ln = _integralize(_pshift(self._n, -ni, -nj))
        k = _zs_content(list(p.values()))
        if p[max(p)] < 0:
            k = -k
        if k != 1:
            p = {m: v // k for m, v in p.items()}
        new_num = _divide_coeffs(_pshift(self._d, -ni, -nj), Fraction(k, ln))
        return Scalar._make(new_num, p)

    def __truediv__(self, other) -> "Scalar":
        other = _as_scalar(other)
        if other is NotImplemented:
            return other
        return _mul(self, other.inverse())

    def __rtruediv__(self, other) -> "Scalar":
        other = _as_scalar(other)
        if other is NotImplemented:
            return other
        return _mul(other, self.inverse())

    def __pow__(self, e: int) -> "Scalar":
        if not isinstance(e, int):
            return NotImplemented
        base = self if e >= 0 else self.inverse()
        e = abs(e)
        md = base.monomial_data()
        if md is not None:
            v, i, j = md
            return Scalar._make({(i * e, j * e): v**e}, _UNIT)
        out = ONE
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def star(self) -> "Scalar":
        """Substitute s -> 1/s, c -> 1/c."""
        n = {(-i, -j): v for (i, j), v in self._n.items()}
        d = {(-i, -j): v for (i, j), v in self._d.items()}
        return Scalar._from_raw(n, d)

    # -- comparison / hashing
    def __eq__(self, other) -> bool:
        if isinstance(other, Scalar):
            return self._n == other._n and self._d == other._d
        o = _as_scalar(other)
        if o is NotImplemented:
            return NotImplemented
        return self._n == o._n and self._d == o._d

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((frozenset(self._n.items()), frozenset(self._d.items())))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._n)

    def __str__(self) -> str:
        num = _render_terms(self._n)
        if len(self._d) == 1:
            return num
        if len(self._n) > 1:
            num = f"({num})"
        return f"{num}/({_render_terms(self._d)})"

    def __repr__(self) -> str:
        return f"Scalar({self})"

    def n_terms(self) -> int:
        return len(self._n) + len(self._d)


def _coerce_terms(x) -> dict:
    if isinstance(x, BiLaurent):
        return dict(x._terms)
    if isinstance(x, (int, Fraction)):
        x = _norm_coeff(x)
        return {(0, 0): x} if x else {}
    if isinstance(x, Mapping):
        return BiLaurent(x)._terms
    raise TypeError(f"cannot build a Laurent polynomial from {type(x).__name__}")


def _as_scalar(x):
    if isinstance(x, Scalar):
        return x
    if isinstance(x, (int, Fraction)):
        x = _norm_coeff(x)
        return Scalar._make({(0, 0): x} if x else {}, _UNIT)
    if isinstance(x, BiLaurent):
        return Scalar(x)
    return NotImplemented


def _add(a: Scalar, b: Scalar) -> Scalar:
    if not a._n:
        return b
    if not b._n:
        return a
    if len(a._d) == 1 and len(b._d) == 1:
        return Scalar._make(_padd(a._n, b._n), _UNIT)
    if a._d == b._d:
        return Scalar._from_raw(_padd(a._n, b._n), a._d)
    # a/d + b = (a + b*d)/d stays reduced because gcd(a, d) = 1
    if len(b._d) == 1:
        return _reduced(_padd(a._n, _pmul(b._n, a._d)), a._d)
    if len(a._d) == 1:
        return _reduced(_padd(b._n, _pmul(a._n, b._d)), b._d)
    g = poly_gcd(a._d, b._d)
    if len(g) == 1 and g.get((0, 0)) == 1:
        # coprime denominators: the sum is already reduced
        num = _padd(_pmul(a._n, b._d), _pmul(b._n, a._d))
        den = _pmul(a._d, b._d)
        return _reduced(num, den)
    ad = _exact_div(a._d, g)
    bd = _exact_div(b._d, g)
    num = _padd(_pmul(a._n, bd), _pmul(b._n, ad))
    if not num:
        return ZERO
    # num is coprime to ad and bd, so only factors of g can cancel
    num, g = _cancel(num, g)
    return Scalar._make(num, _pmul(_pmul(ad, bd), g))


def _reduced(num: dict, den: dict) -> Scalar:
    return Scalar._make(num, den) if num else ZERO


def _mul(a: Scalar, b: Scalar) -> Scalar:
    if not a._n or not b._n:
        return ZERO
    da, db = len(a._d) == 1, len(b._d) == 1
    if da and db:
        return Scalar._make(_pmul(a._n, b._n), _UNIT)
    # monomials with rational coefficient keep the fraction reduced
    if da and len(a._n) == 1:
        ((i, j), v), = a._n.items()
        return Scalar._make({(x + i, y + j): w * v for (x, y), w in b._n.items()}, b._d)
    if db and len(b._n) == 1:
        ((i, j), v), = b._n.items()
        return Scalar._make({(x + i, y + j): w * v for (x, y), w in a._n.items()}, a._d)
    # cross cancellation keeps the intermediate sizes small
    n1, d1 = _cancel(a._n, b._d)
    n2, d2 = _cancel(b._n, a._d)
    num = _pmul(n1, n2)
    den = _pmul(d1, d2)
    return Scalar._make(num, den)


def _cancel(n: dict, d: dict) -> tuple[dict, dict]:
    """Remove gcd(n, d) from a Laurent numerator n and primitive denominator d."""
    if len(d) == 1:
        return n, d
    ni, nj = _pmin(n)
    p, ln = _integralize(_pshift(n, -ni, -nj))
    g = poly_gcd(p, d)
    if len(g) == 1 and g.get((0, 0)) == 1:
        return n, d
    q = _exact_div(p, g)
    return _pshift(_divide_coeffs(q, ln), ni, nj), _exact_div(d, g)


def scalar_sum(items: Iterable[Scalar]) -> Scalar:
    """Sum many scalars, combining equal denominators before any gcd work."""
    groups: dict = {}
    laurent: dict = {}
    for x in items:
        if not x._n:
            continue
        if len(x._d) == 1:
            laurent = _padd(laurent, x._n)
            continue
        key = frozenset(x._d.items())
        if key in groups:
            groups[key] = (x._d, _padd(groups[key][1], x._n))
        else:
            groups[key] = (x._d, x._n)
    total = Scalar._make(laurent, _UNIT)
    for d, n in groups.values():
        if n:
            total = total + Scalar._from_raw(n, d)
    return total


# --------------------------------------------------------------------------
# constants and constructors

ZERO = Scalar._make({}, _UNIT)
ONE = Scalar._make({(0, 0): 1}, _UNIT)
S = Scalar._make({(1, 0): 1}, _UNIT)
C = Scalar._make({(0, 1): 1}, _UNIT)
HBAR = Scalar._make({(1, 0): 1, (-1, 0): -1}, _UNIT)


def monomial(coeff, i: int = 0, j: int = 0) -> Scalar:
    """``coeff * s^i * c^j``."""
    return Scalar({(i, j): coeff})


def s_pow(k: int) -> Scalar:
    return Scalar._make({(k, 0): 1}, _UNIT)


def c_pow(k: int) -> Scalar:
    return Scalar._make({(0, k): 1}, _UNIT)


# --------------------------------------------------------------------------
# operation-style entry points

def scalar_arith(op: str, a: Scalar, b: Scalar) -> Scalar:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        if b.is_zero():
            raise ZeroDivisionError("division by zero in Q(s, c)")
        return a / b
    raise ValueError(f"unknown scalar operation {op!r}")


def scalar_star(a: Scalar) -> Scalar:
    return a.star()


def scalar_is_zero(a: Scalar) -> bool:
    return a.is_zero()
