import random

import pytest

from dahaskein.braidcompile import (
    BraidToken,
    BraidWord,
    compile_word,
    eval_class,
    parse_braid,
    relation_witness,
)
from dahaskein.errors import IndexRangeError, KappaMismatchError, ParseError
from dahaskein.laurent import PolyElement
from dahaskein.parsing import parse_poly
from dahaskein.polyrep import apply_word, op_T
from dahaskein.scalar import S, s_pow


def tokens(w):
    return [(t.kind, t.index, t.exponent) for t in w.letters]


def random_word(rng, kappa, length):
    parts = []
    for _ in range(length):
        kind = rng.choice("Txyg")
        e = rng.choice([1, -1, 2])
        if kind == "g":
            parts.append(f"g^{e}")
        else:
            hi = kappa - 1 if kind == "T" else kappa
            parts.append(f"{kind}{rng.randint(1, hi)}^{e}")
    return " ".join(parts)


class TestParse:
    def test_examples(self):
        assert tokens(parse_braid("T1 x1^2 y2^-1", 2)) == [("sigma", 1, 1), ("xloop", 1, 2), ("yloop", 2, -1)]
        assert len(parse_braid("", 3)) == 0
        with pytest.raises(IndexRangeError) as info:
            parse_braid("T5", 3)
        assert info.value.position == 0

    def test_separators_and_case(self):
        a = parse_braid("t1*X2^-1 * Y1 G", 2)
        assert tokens(a) == [("sigma", 1, 1), ("xloop", 2, -1), ("yloop", 1, 1), ("gshift", None, 1)]
        assert str(a) == "T1 x2^-1 y1 g"

    @pytest.mark.parametrize(
        "text, pos",
        [("T1 q", 3), ("T", 0), ("x1^", 2), ("x1^0", 3), ("gx", 0), ("x1x2", 2)],
    )
    def test_syntax_errors(self, text, pos):
        with pytest.raises(ParseError) as info:
            parse_braid(text, 2)
        assert info.value.position == pos

    def test_index_error_location(self):
        with pytest.raises(IndexRangeError) as info:
            parse_braid("x1 y1  x3", 2)
        assert info.value.position == 7

    def test_word_validation(self):
        with pytest.raises(IndexRangeError):
            BraidWord(2, (BraidToken("sigma", 2, 1),))
        with pytest.raises(KappaMismatchError):
            BraidWord(2) * BraidWord(3)


class TestEval:
    def test_examples(self):
        assert eval_class("T1", 2).element == PolyElement.one(2).scale(S)
        for k in (2, 3, 4):
            assert eval_class("y1", k).element == PolyElement.one(k).scale(s_pow(k - 1))
        assert eval_class("x1 x2^-1", 2).element == parse_poly("x1*x2^-1", 2)
        assert eval_class("", 3).element == PolyElement.one(3)

    def test_degree_components(self):
        nf = eval_class("T1 x1 y2 x2^-1", 2)
        total = PolyElement.zero(2)
        for d, part in nf.degree_components.items():
            assert all(sum(a) == d for a in part.support())
            total = total + part
        assert total == nf.element
        assert set(nf.to_json()) == {"element", "degree_components"}

    def test_x_words_are_literal(self):
        rng = random.Random(7)
        for _ in range(20):
            exps = [rng.randint(-3, 3) for _ in range(3)]
            text = " ".join(f"x{i + 1}^{e}" for i, e in enumerate(exps) if e)
            assert eval_class(text, 3).element == PolyElement.monomial(exps)

    def test_word_homomorphism(self):
        rng = random.Random(11)
        for _ in range(25):
            u = parse_braid(random_word(rng, 3, rng.randint(0, 3)), 3)
            v = parse_braid(random_word(rng, 3, rng.randint(0, 3)), 3)
            assert eval_class(u * v).element == apply_word(compile_word(u), eval_class(v).element)

    def test_left_and_right_sigma(self):
        rng = random.Random(5)
        for _ in range(20):
            w = parse_braid(random_word(rng, 3, 3), 3)
            for i in (1, 2):
                sigma = parse_braid(f"T{i}", 3)
                assert eval_class(sigma * w).element == op_T(i, eval_class(w).element)
                assert eval_class(w * sigma).element == eval_class(w).element.scale(S)

    def test_kappa_required_for_text(self):
        with pytest.raises(ValueError):
            eval_class("T1")
        with pytest.raises(KappaMismatchError):
            eval_class(parse_braid("T1", 2), 3)


class TestWitness:
    def test_examples(self):
        assert relation_witness("A1", 1, 2)
        assert relation_witness("A2", 2, 2)
        assert relation_witness("marked-point", None, 2)

    @pytest.mark.parametrize("kappa", [2, 3])
    def test_all_indices(self, kappa):
        for i in range(1, kappa):
            assert relation_witness("A1", i, kappa)
            assert relation_witness("corner-typo-check", i, kappa)
        for i in range(1, kappa + 1):
            assert relation_witness("A2", i, kappa)
        assert relation_witness("marked-point", None, kappa)

    def test_bad_arguments(self):
        with pytest.raises(ValueError):
            relation_witness("A3", 1, 2)
        with pytest.raises(IndexRangeError):
            relation_witness("A1", 2, 2)
        with pytest.raises(IndexRangeError):
            relation_witness("A2", 3, 2)
