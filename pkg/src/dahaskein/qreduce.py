"""Reduction of classes in the quotient Q_kappa to multiples of the constant class.

The quotient is P_kappa modulo the left relations

* (R1)  [T_i f] = s [f]
* (R2)  [X^a] = c^(-2 a_1) [X^(a_2, ..., a_kappa, a_1)]

and every class is a scalar multiple lambda(a) of [1].  ``Reducer`` computes
lambda(a) constructively; ``OracleQuotient`` recomputes it by brute-force
linear algebra on a finite exponent box.
"""

from __future__ import annotations

import itertools
import threading
from dataclasses import dataclass
from functools import lru_cache

from .errors import BoxTooSmallError, InconsistentQuotientError, ReductionError
from .laurent import PolyElement, complexity, lx_total_degree_components, rotate
from .linalg import nullspace
from .polyrep import op_T
from .scalar import ONE, S, ZERO, Scalar, c_pow, s_pow, scalar_sum

__all__ = [
    "ComplexityIndex",
    "ReductionResult",
    "Reducer",
    "OracleQuotient",
    "get_reducer",
    "reduce_monomial",
    "reduce_class",
    "oracle_reduce",
]

_S_INV = s_pow(-1)


@dataclass(frozen=True, order=True)
class ComplexityIndex:
    l1: int
    alpha: int
    beta: int

    @classmethod
    def of(cls, a) -> "ComplexityIndex":
        return cls(*complexity(a))


@dataclass(frozen=True)
class ReductionResult:
    """``[X^a] = lam * [1]`` together with the rules that produced it."""

    lam: Scalar
    trace: tuple = ()
    provenance: str = "recursive"


class Reducer:
    """Memoized reducer for a fixed number of strands.

    Safe to share between threads: the memo table is guarded by a lock and
    every entry is a deterministic function of its key.
    """

    def __init__(self, kappa: int, memo: bool = True):
        if kappa < 1:
            raise ValueError("kappa must be positive")
        self.kappa = kappa
        self._memo: dict | None = {} if memo else None
        self._lock = threading.Lock()

    def reduce_monomial(self, a) -> ReductionResult:
        a = tuple(int(x) for x in a)
        if len(a) != self.kappa:
            raise ValueError(f"exponent vector {a} does not have length {self.kappa}")
        if self._memo is not None:
            with self._lock:
                hit = self._memo.get(a)
            if hit is not None:
                return hit
        res = self._compute(a)
        if self._memo is not None:
            with self._lock:
                self._memo.setdefault(a, res)
        return res

    def lam(self, a) -> Scalar:
        return self.reduce_monomial(a).lam

    def reduce_class(self, f: PolyElement) -> Scalar:
        if f.kappa != self.kappa:
            raise ValueError(f"element has kappa={f.kappa}, reducer has kappa={self.kappa}")
        return scalar_sum(v * self.lam(a) for a, v in f.coeffs.items() if sum(a) == 0)

    # -- the algorithm
    def _compute(self, a: tuple) -> ReductionResult:
        if sum(a) != 0:
            return ReductionResult(ZERO, ("total-degree-kill",))
        if not any(a):
            return ReductionResult(ONE, ("base-case",))
        top = max(a)
        # [X^a] = c^(-2 (a_1 + ... + a_k)) [X^(eta^k a)]
        best_k, best = None, None
        b = a
        for k in range(self.kappa):
            if b[0] == top and (best is None or b > best):
                best_k, best = k, b
            b = rotate(b)
        if best_k:
            # best is its own preferred rotation, so this lands in _core
            core = self.reduce_monomial(best)
            factor = c_pow(-2 * sum(a[:best_k]))
            return ReductionResult(factor * core.lam, ("R2-rotate",) + core.trace)
        return self._core(a)

    def _core(self, b: tuple) -> ReductionResult:
        """lambda(b) for b with b_1 maximal and total degree 0."""
        measure = ComplexityIndex.of(b)
        kappa = self.kappa
        coef = ONE  # [X^b] = coef [X^cur] + sum(acc)
        acc: list = []
        trace: list = []
        cur = b
        for i in range(1, kappa):
            p, q = cur[i - 1], cur[i]
            if p == q:
                continue
            swapped = cur[: i - 1] + (q, p) + cur[i + 1 :]
            image = op_T(i, PolyElement.monomial(cur))
            # s [X^cur] = [T_i X^cur]  =  lead [X^swapped] + self_c [X^cur] + rest
            lead = image.coefficient(swapped)
            self_c = image.coefficient(cur)
            scale = (S - self_c).inverse() if not self_c.is_zero() else _S_INV
            for m, v in image.coeffs.items():
                if m == swapped or m == cur:
                    continue
                if not ComplexityIndex.of(m) < measure:
                    raise ReductionError(f"complexity did not drop: {m} from {b}")
                acc.append(coef * scale * v * self.lam(m))
            coef = coef * scale * lead
            cur = swapped
            trace.append(f"R1-step {i}")
        if cur != rotate(b):
            raise ReductionError(f"sweep ended at {cur}, expected {rotate(b)}")
        # (R2): [X^(eta b)] = c^(2 b_1) [X^b]
        pivot = ONE - coef * c_pow(2 * b[0])
        if pivot.is_zero():
            raise ReductionError(f"pivot vanished while reducing {b}")
        trace.append("R2-close")
        return ReductionResult(scalar_sum(acc) / pivot, tuple(trace))


@lru_cache(maxsize=None)
def get_reducer(kappa: int) -> Reducer:
    """Shared memoized reducer for ``kappa`` strands."""
    return Reducer(kappa)


def reduce_monomial(a) -> ReductionResult:
    a = tuple(a)
    return get_reducer(len(a)).reduce_monomial(a)


def reduce_class(f: PolyElement) -> Scalar:
    return get_reducer(f.kappa).reduce_class(f)


# --------------------------------------------------------------------------
# brute-force oracle

class OracleQuotient:
    """The quotient of the span of {X^b : b in box, sum(b) = degree} by the
    (R1) and (R2) relations supported in the box.

    ``functional`` holds lambda on the box monomials (all zero when the
    quotient vanishes); ``dimension`` is the dimension of the quotient.
    """

    def __init__(self, kappa: int, bound: int, degree: int = 0):
        if bound < 1:
            raise ValueError("bound must be positive")
        self.kappa, self.bound, self.degree = kappa, bound, degree
        rng = range(-bound, bound + 1)
        self.monomials = [b for b in itertools.product(rng, repeat=kappa) if sum(b) == degree]
        self.index = {b: n for n, b in enumerate(self.monomials)}
        n = len(self.monomials)
        rows = []
        for b in self.monomials:
            xb = PolyElement.monomial(b)
            for i in range(1, kappa):
                rows.append(self._row(op_T(i, xb) - xb.scale(S)))
            rows.append(self._row(PolyElement.monomial(rotate(b), c_pow(-2 * b[0])) - xb))
        kernel = nullspace(rows, n) if n else []
        self.dimension = len(kernel)
        expected = 1 if degree == 0 else 0
        if self.dimension != expected:
            raise InconsistentQuotientError(
                f"degree-{degree} quotient on box [-{bound},{bound}]^{kappa} has dimension "
                f"{self.dimension}, expected {expected}"
            )
        if kernel:
            v = kernel[0]
            norm = v[self.index[(0,) * kappa]]
            if norm.is_zero():
                raise InconsistentQuotientError("the constant class vanishes in the quotient")
            inv = norm.inverse()
            self.functional = {b: x * inv for b, x in zip(self.monomials, v)}
        else:
            self.functional = {b: ZERO for b in self.monomials}

    def _row(self, f: PolyElement) -> list:
        row = [ZERO] * len(self.monomials)
        for a, v in f.coeffs.items():
            pos = self.index.get(a)
            if pos is None:
                raise BoxTooSmallError(f"relation term X^{a} escapes the box of radius {self.bound}")
            row[pos] = v
        return row

    def evaluate(self, f: PolyElement) -> Scalar:
        out = []
        for a, v in f.coeffs.items():
            if a not in self.functional:
                raise BoxTooSmallError(f"monomial X^{a} lies outside the box of radius {self.bound}")
            out.append(v * self.functional[a])
        return scalar_sum(out)


@lru_cache(maxsize=None)
def _oracle(kappa: int, bound: int, degree: int) -> OracleQuotient:
    return OracleQuotient(kappa, bound, degree)


def oracle_reduce(f: PolyElement, bound: int) -> Scalar:
    """lambda(f) computed by exact linear algebra on the box [-bound, bound]^kappa."""
    total = []
    for d, part in lx_total_degree_components(f).items():
        if part.is_zero():
            continue
        total.append(_oracle(f.kappa, bound, d).evaluate(part))
    return scalar_sum(total)
