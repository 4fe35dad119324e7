import threading

import pytest
from hypothesis import given, settings

from conftest import polys, window
from dahaskein.errors import BoxTooSmallError
from dahaskein.laurent import PolyElement, rotate
from dahaskein.parsing import parse_poly
from dahaskein.polyrep import op_g, op_T
from dahaskein.qreduce import (
    ComplexityIndex,
    OracleQuotient,
    Reducer,
    oracle_reduce,
    reduce_class,
    reduce_monomial,
)
from dahaskein.scalar import ONE, S, ZERO, C, c_pow

si = S**-1
PINNED = (S - si) / (si * C**2 - S)


class TestExamples:
    def test_base_and_degree_kill(self):
        assert reduce_monomial((0, 0)).lam == ONE
        assert reduce_monomial((0, 0, 0)).trace == ("base-case",)
        r = reduce_monomial((1, 0))
        assert r.lam == ZERO and r.trace == ("total-degree-kill",)

    def test_pinned_value(self):
        r = reduce_monomial((1, -1))
        assert r.lam == PINNED
        assert r.trace == ("R1-step 1", "R2-close")
        assert r.provenance == "recursive"

    def test_rotated_value(self):
        r = reduce_monomial((-1, 1))
        assert r.lam == C**2 * PINNED
        assert r.trace[0] == "R2-rotate"

    def test_reduce_class(self):
        assert reduce_class(parse_poly("1 + x1", 2)) == ONE
        assert reduce_class(PolyElement.zero(2)) == ZERO

    def test_oracle_examples(self):
        assert oracle_reduce(PolyElement.one(2), 1) == ONE
        assert oracle_reduce(parse_poly("x1*x2^-1", 2), 2) == PINNED
        assert oracle_reduce(parse_poly("x1^-1*x2", 2), 2) == (S - si) * C**2 / (si * C**2 - S)

    def test_oracle_box_errors(self):
        with pytest.raises(BoxTooSmallError):
            oracle_reduce(parse_poly("x1^3*x2^-3", 2), 2)
        with pytest.raises(ValueError):
            OracleQuotient(2, 0)

    def test_oracle_dimensions(self):
        assert OracleQuotient(2, 2, 0).dimension == 1
        assert OracleQuotient(2, 2, 1).dimension == 0
        assert OracleQuotient(3, 1, -1).dimension == 0


class TestInvariants:
    @pytest.mark.parametrize("kappa", [2, 3])
    def test_nonzero_degree_vanishes(self, kappa):
        for a in window(kappa, 3):
            if sum(a):
                assert reduce_monomial(a).lam.is_zero()

    @pytest.mark.parametrize("kappa", [2, 3])
    def test_rotation_consistency(self, kappa):
        for a in window(kappa, 2):
            assert reduce_monomial(a).lam == c_pow(-2 * a[0]) * reduce_monomial(rotate(a)).lam

    @pytest.mark.parametrize("kappa", [2, 3])
    def test_oracle_equivalence(self, kappa):
        for a in window(kappa, 2):
            if sum(a) == 0:
                assert reduce_monomial(a).lam == oracle_reduce(PolyElement.monomial(a), 2)

    @settings(max_examples=25)
    @given(polys(3, d=2, max_terms=3))
    def test_relation_kernel(self, f):
        for i in (1, 2):
            assert reduce_class(op_T(i, f) - f.scale(S)).is_zero()
        # (R2): [X^a] = c^(-2 a_1) [X^(eta a)], i.e. g^-1 acting on the class
        assert reduce_class(op_g(f, "inverse")) == reduce_class(f)

    def test_complexity_decreases(self):
        # the reducer raises ReductionError if any correction fails to drop
        for a in window(3, 3):
            if sum(a) == 0:
                reduce_monomial(a)
        assert ComplexityIndex.of((2, -1, -1)) == ComplexityIndex(4, 2, 1)
        assert ComplexityIndex.of((2, -1, -1)) < ComplexityIndex.of((2, 1, -3))
        assert ComplexityIndex.of((1, 1, -2)) < ComplexityIndex.of((2, -1, -1))
        assert ComplexityIndex.of((1, 1, -2)) > ComplexityIndex.of((1, 0, -1))

    def test_memo_is_transparent(self):
        plain = Reducer(3, memo=False)
        for a in window(3, 1):
            assert plain.lam(a) == reduce_monomial(a).lam

    def test_concurrent_use(self):
        shared = Reducer(3)
        targets = [a for a in window(3, 2) if sum(a) == 0]
        results: dict = {}

        def work(k):
            results[k] = [shared.lam(a) for a in targets[k::4]]

        threads = [threading.Thread(target=work, args=(k,)) for k in range(4)]
        for t in threads:
            t.start()
        for t in threads:
            t.join()
        for k in range(4):
            assert results[k] == [reduce_monomial(a).lam for a in targets[k::4]]

    def test_wrong_length(self):
        with pytest.raises(ValueError):
            Reducer(2).reduce_monomial((1, 0, -1))
