"""Shared strategies and a sympy-based oracle for Q(s, c)."""

from __future__ import annotations

import itertools
from fractions import Fraction

import pytest
import sympy
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from dahaskein.laurent import PolyElement
from dahaskein.scalar import Scalar

SYM_S, SYM_C = sympy.symbols("s c")

# exact arithmetic has heavy-tailed timings; a fixed seed keeps runs reproducible
settings.register_profile(
    "exact", deadline=None, max_examples=40, derandomize=True, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("exact")


def to_sympy(x: Scalar):
    """Independent rendering of a Scalar as a sympy rational function."""

    def poly(terms):
        return sum(
            (sympy.Rational(v.numerator, v.denominator) if isinstance(v, Fraction) else sympy.Integer(v))
            * SYM_S**i
            * SYM_C**j
            for (i, j), v in terms.items()
        )

    return poly(x.numerator.terms) / poly(x.denominator.terms)


def sympy_equal(a, b) -> bool:
    return sympy.cancel(sympy.together(a - b)) == 0


def window(kappa: int, d: int):
    return list(itertools.product(range(-d, d + 1), repeat=kappa))


# --------------------------------------------------------------------------
# strategies

small_int = st.integers(min_value=-3, max_value=3)
coeff = st.fractions(min_value=-5, max_value=5, max_denominator=4)

laurent_terms = st.dictionaries(st.tuples(small_int, small_int), coeff, min_size=0, max_size=4)


@st.composite
def scalars(draw, allow_zero: bool = True):
    num = draw(laurent_terms)
    den = draw(laurent_terms.filter(lambda d: any(v != 0 for v in d.values())))
    x = Scalar(num, den)
    if not allow_zero and x.is_zero():
        x = Scalar(1)
    return x


nonzero_scalars = scalars(allow_zero=False)


def polys(kappa: int, d: int = 2, max_terms: int = 3, coeffs=None):
    coeffs = coeffs if coeffs is not None else scalars()
    vec = st.tuples(*[st.integers(-d, d)] * kappa)
    return st.dictionaries(vec, coeffs, max_size=max_terms).map(lambda t: PolyElement(kappa, t))


@pytest.fixture
def s():
    from dahaskein.scalar import S

    return S


@pytest.fixture
def c():
    from dahaskein.scalar import C

    return C


# --------------------------------------------------------------------------
# acceptance reporting

ACCEPTANCE_LINES: list = []


@pytest.fixture
def criterion():
    """Record one PASS/FAIL line per acceptance criterion, then assert it."""

    def record(number: int, title: str, ok: bool, detail: str = "") -> None:
        line = f"{'PASS' if ok else 'FAIL'} [{number}] {title}" + (f" ({detail})" if detail else "")
        ACCEPTANCE_LINES.append((number, line))
        print(line)
        assert ok, line

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for _, line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
