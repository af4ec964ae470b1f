import random
from fractions import Fraction

import pytest
from hypothesis import given

import conftest as strat
from parahopf.terms import (EMPTY_WORD, MINUS, PLUS, Element, Scalar, Word,
                            anticommutator_symbol, b_minus, b_plus, g_action,
                            parity_decompose, word, G, K_MINUS, K_PLUS)


class TestScalar:
    def test_zero_is_canonical(self):
        assert Scalar(Fraction(0, 5), Fraction(0, 7)) == Scalar()
        assert not Scalar()
        assert Scalar(Fraction(1)) != Scalar()

    @given(strat.scalars, strat.scalars)
    def test_addition_roundtrip(self, a, b):
        assert (a + b) - b == a

    @given(strat.scalars, strat.nonzero_scalars)
    def test_multiplication_roundtrip(self, a, b):
        assert (a * b) / b == a

    def test_imaginary_unit(self):
        i = Scalar(Fraction(0), Fraction(1))
        assert i * i == Scalar(Fraction(-1))

    def test_division_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            Scalar(Fraction(1)) / Scalar()


class TestGenerators:
    def test_parities(self):
        assert b_plus(1).parity == 1
        assert b_minus(4).parity == 1
        assert anticommutator_symbol(1, PLUS, 2, MINUS).parity == 0
        assert G.parity == 0
        assert K_PLUS.parity == 0 and K_MINUS.parity == 0

    def test_anticommutator_symbol_orientation(self):
        # {x, y} = {y, x}: both orders construct the same letter
        assert anticommutator_symbol(2, MINUS, 1, PLUS) == \
            anticommutator_symbol(1, PLUS, 2, MINUS)
        assert anticommutator_symbol(3, PLUS, 1, PLUS) == \
            anticommutator_symbol(1, PLUS, 3, PLUS)

    def test_letter_order_groups(self):
        e = anticommutator_symbol(1, PLUS, 1, MINUS)
        assert e.sort_key < b_plus(1).sort_key < b_minus(1).sort_key
        assert b_minus(9).sort_key < G.sort_key < K_PLUS.sort_key < K_MINUS.sort_key


class TestWords:
    def test_unit_and_concat(self):
        w = word(b_plus(1), b_minus(2))
        assert EMPTY_WORD * w == w == w * EMPTY_WORD
        assert len(w) == 2

    def test_parity(self):
        assert word(b_plus(1)).parity == 1
        assert word(b_plus(1), b_minus(1)).parity == 0
        assert word(b_plus(1), G).parity == 1

    @given(strat.pb_words, strat.pb_words, strat.pb_words)
    def test_concat_associative(self, a, b, c):
        assert (a * b) * c == a * (b * c)


class TestElement:
    def test_additive_identity_and_inverse(self):
        b1 = Element.of(b_plus(1))
        assert b1 + Element.zero() == b1
        assert b1 + b1.scale(-1) == Element.zero()

    def test_like_term_collection(self):
        b1 = Element.of(b_plus(1))
        assert b1.scale(2) + b1.scale(3) == b1.scale(5)

    def test_unit_word(self):
        w = word(b_plus(1), b_minus(2))
        assert Element.one() * Element.of(w) == Element.of(w)

    def test_bilinearity(self):
        b1, m1, b2 = Element.of(b_plus(1)), Element.of(b_minus(1)), Element.of(b_plus(2))
        lhs = (b1 + m1) * b2
        assert lhs == b1 * b2 + m1 * b2

    def test_product_associativity_and_distributivity_bulk(self):
        # randomized, >= 1000 triples
        rng = random.Random(12345)
        letters = [b_plus(1), b_minus(1), b_plus(2), b_minus(2),
                   anticommutator_symbol(1, PLUS, 1, MINUS)]

        def rand_element():
            out = Element.zero()
            for _ in range(rng.randint(0, 3)):
                w = Word(tuple(rng.choice(letters)
                               for _ in range(rng.randint(0, 3))))
                out = out + Element.of(w).scale(rng.randint(-4, 4))
            return out

        for _ in range(1000):
            a, b, c = rand_element(), rand_element(), rand_element()
            assert (a * b) * c == a * (b * c)
            assert a * (b + c) == a * b + a * c

    @given(strat.pb_elements)
    def test_parity_decomposition_sums_back(self, a):
        even, odd = parity_decompose(a)
        assert even + odd == a
        assert all(w.parity == 0 for w in even.terms)
        assert all(w.parity == 1 for w in odd.terms)

    @given(strat.pb_elements)
    def test_g_action_involution(self, a):
        assert g_action(g_action(a)) == a

    def test_g_action_examples(self):
        assert g_action(Element.of(b_plus(1))) == Element.of(b_plus(1)).scale(-1)
        even = Element.of(word(b_plus(1), b_minus(2)))
        assert g_action(even) == even

    @given(strat.pb_elements, strat.pb_elements)
    def test_g_action_is_algebra_map(self, a, b):
        assert g_action(a * b) == g_action(a) * g_action(b)
