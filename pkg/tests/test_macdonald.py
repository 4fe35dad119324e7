import itertools

import pytest

from dahaskein.errors import NonInvariantSupportError
from dahaskein.laurent import PolyElement
from dahaskein.macdonald import _y_matrix, dominates, mac_poly, mac_support, orthogonality_check
from dahaskein.pairing import pair_value
from dahaskein.parsing import parse_poly
from dahaskein.polyrep import op_Y
from dahaskein.qreduce import reduce_monomial
from dahaskein.scalar import C, ONE, S, s_pow

si = S**-1


def comps(kappa, lo, hi, max_abs_sum):
    return [a for a in itertools.product(range(lo, hi + 1), repeat=kappa) if abs(sum(a)) <= max_abs_sum]


class TestExamples:
    def test_support(self):
        assert mac_support((0, 0)) == [(0, 0)]
        assert mac_support((1, 0)) == [(1, 0), (0, 1)]
        assert mac_support((1, -1)) == [(1, -1), (-1, 1), (0, 0)]

    def test_dominance(self):
        assert dominates((2, 0), (1, 1))
        assert not dominates((1, 1), (2, 0))
        assert not dominates((1, 0), (1, 1))

    @pytest.mark.parametrize("kappa", [1, 2, 3, 4])
    def test_constant(self, kappa):
        m = mac_poly((0,) * kappa)
        assert m.polynomial == PolyElement.one(kappa)
        assert m.eigenvalues == tuple(s_pow(kappa + 1 - 2 * i) for i in range(1, kappa + 1))

    def test_two_strand_closed_forms(self):
        m = mac_poly((1, 0))
        assert m.polynomial == parse_poly("x1", 2)
        assert m.eigenvalues == (si * C**2, S)
        m = mac_poly((0, 1))
        gamma = (S - si) * C**2 / (S - si * C**2)
        assert m.polynomial == parse_poly("x2", 2) + parse_poly("x1", 2).scale(gamma)
        assert m.eigenvalues == (S, si * C**2)

    def test_orthogonality_examples(self):
        assert orthogonality_check((1, 0), (0, 1))
        assert orthogonality_check((1, 0), (1, 0))
        assert orthogonality_check((0, 0), (1, -1))
        # the worked cancellation behind the first example
        lam = reduce_monomial((-1, 1)).lam
        gamma = (S - si) * C**2 / (S - si * C**2)
        assert lam + gamma == 0 * ONE
        assert pair_value(mac_poly((1, 0)).polynomial, mac_poly((1, 0)).polynomial) == ONE

    def test_json(self):
        data = mac_poly((1, 0)).to_json()
        assert data == {
            "composition": [1, 0],
            "polynomial": [{"exponents": [1, 0], "coeff": "1"}],
            "eigenvalues": ["s^-1*c^2", "s"],
        }

    def test_non_invariant_support_detected(self):
        support = [(0, 1)]  # Y_1 X_2 involves X_1
        with pytest.raises(NonInvariantSupportError):
            _y_matrix(1, support, {b: n for n, b in enumerate(support)})


class TestInvariants:
    @pytest.mark.parametrize("kappa", [2, 3])
    def test_support_invariance_and_eigenvectors(self, kappa):
        for a in comps(kappa, -2, 2, 1):
            m = mac_poly(a)  # raises NonInvariantSupportError on failure
            assert m.polynomial.coefficient(a) == ONE
            assert set(m.polynomial.support()) <= set(m.support)
            for i, y in enumerate(m.eigenvalues, start=1):
                assert op_Y(i, m.polynomial) == m.polynomial.scale(y)

    @pytest.mark.parametrize("kappa", [2, 3])
    def test_spectrum_separation(self, kappa):
        window = comps(kappa, -2, 2, 1)
        spectra = [mac_poly(a).eigenvalues for a in window]
        assert len(set(spectra)) == len(window)

    def test_pairwise_orthogonality_two_strands(self):
        window = comps(2, -2, 2, 1)
        for a, b in itertools.product(window, repeat=2):
            assert orthogonality_check(a, b), (a, b)
