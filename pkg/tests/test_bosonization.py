import random

import pytest

from parahopf.bosonization import (InhomogeneousInput,
                                   bosonise_cross_validation,
                                   check_ordinary_hopf_axioms,
                                   check_quasitriangularity, cz2_coaction,
                                   fuse_pair, general_smash_antipode,
                                   general_smash_coproduct, k_antipode,
                                   k_coproduct, k_counit, smash_antipode,
                                   smash_coproduct, smash_counit,
                                   smash_multiply, split_group_tail)
from parahopf.grammar import parse_element
from parahopf.report import all_passed
from parahopf.rewriting import (PARABOSON_G, ForeignLetter, normal_form,
                                paraboson_relations)
from parahopf.tensors import TensorElement, tensor
from parahopf.terms import (EMPTY_WORD, Element, Scalar, b_minus, b_plus,
                            word, G, K_MINUS, K_PLUS)
from parahopf.wordgen import sample_words


def tens(spec: str) -> TensorElement:
    out = TensorElement.zero(2)
    for part in spec.split(";"):
        left, right = part.split("|")
        out = out + tensor(parse_element(left), parse_element(right))
    return out


class TestCoaction:
    def test_odd(self):
        assert cz2_coaction(Element.of(b_plus(1))) == tens("g | B+1")

    def test_even(self):
        assert cz2_coaction(Element.one()) == tens("I | I")
        assert cz2_coaction(parse_element("B+1 B-2")) == tens("I | B+1 B-2")

    def test_inhomogeneous_rejected(self):
        with pytest.raises(InhomogeneousInput):
            cz2_coaction(parse_element("I + B+1"))


class TestSmashPairs:
    def test_action_twist(self):
        # (1 * g)(B+1 * 1) = (g |> B+1) * g = -B+1 * g
        got = smash_multiply(tens("I | g"), tens("B+1 | I"))
        assert got == tens("-1 B+1 | g")

    def test_trivial_group_parts(self):
        got = smash_multiply(tens("B+1 | I"), tens("B+2 | I"))
        assert got == tens("B+1 B+2 | I")

    def test_group_law(self):
        assert smash_multiply(tens("I | g"), tens("I | g")) == tens("I | I")

    def test_matches_word_product(self):
        rng = random.Random(11)
        for a in sample_words("pb", 2, 2, 12, rng):
            for h1 in (EMPTY_WORD, word(G)):
                for b in sample_words("pb", 2, 2, 4, rng):
                    for h2 in (EMPTY_WORD, word(G)):
                        x = TensorElement(2, {(a, h1): 1})
                        y = TensorElement(2, {(b, h2): 1})
                        direct = normal_form(Element.of(a * h1 * b * h2),
                                             PARABOSON_G)
                        assert fuse_pair(smash_multiply(x, y)) == direct

    def test_split_group_tail(self):
        w = word(b_plus(1), b_minus(2), G)
        assert split_group_tail(w) == (word(b_plus(1), b_minus(2)), word(G))


class TestGExtensionMaps:
    def test_coproduct_on_generators(self):
        assert smash_coproduct(Element.of(b_plus(1))) == tens("B+1 | I; g | B+1")
        assert smash_coproduct(Element.of(G)) == tens("g | g")

    def test_coproduct_on_mixed_word(self):
        got = smash_coproduct(parse_element("g B+1"))
        expected = tens("-1 B+1 g | g; -1 I | B+1 g")  # g B+1 = -B+1 g
        assert got == expected

    def test_antipode(self):
        assert smash_antipode(Element.of(b_plus(1))) == parse_element("B+1 g")
        assert smash_antipode(Element.of(G)) == Element.of(G)
        assert smash_antipode(parse_element("g B+1")) == parse_element("B+1")

    def test_antipode_two_written_forms_agree(self):
        # B g and -g B reduce to the same normal form
        assert normal_form(parse_element("B+1 g"), PARABOSON_G) == \
            normal_form(parse_element("-1 g B+1"), PARABOSON_G)

    def test_counit(self):
        assert smash_counit(Element.of(G)) == Scalar.of(1)
        assert smash_counit(Element.of(b_plus(1))) == Scalar.of(0)

    def test_antipode_convolution_on_generator(self):
        # S(B+1) 1 + S(g) B+1 = B+1 g + g B+1 = 0 = eps(B+1) I
        dw = smash_coproduct(Element.of(b_plus(1)))
        from parahopf.bosonization import _word_antipode

        got = dw.map_slot(0, lambda u: _word_antipode("pbg", u)).multiply_out(PARABOSON_G)
        assert got.is_zero()


class TestKExtensionMaps:
    def test_coproduct(self):
        assert k_coproduct(Element.of(b_minus(2))) == tens("B-2 | I; K- | B-2")
        assert k_coproduct(Element.of(K_PLUS)) == tens("K+ | K+")

    def test_antipode(self):
        assert k_antipode(Element.of(K_PLUS)) == Element.of(K_MINUS)
        assert k_antipode(Element.of(b_plus(1))) == parse_element("B+1 K-")
        assert k_antipode(Element.of(b_minus(1))) == parse_element("B-1 K+")

    def test_counit(self):
        assert k_counit(Element.of(K_MINUS)) == Scalar.of(1)
        assert k_counit(parse_element("K+ K-")) == Scalar.of(1)

    def test_relations_annihilated(self):
        for rel in paraboson_relations(2):
            assert k_coproduct(rel).is_zero()
            assert k_counit(rel) == Scalar.of(0)
            assert k_antipode(rel).is_zero()
        inverse_rel = parse_element("K+ K-") - 1
        assert k_coproduct(inverse_rel).is_zero()

    def test_foreign_letter(self):
        with pytest.raises(ForeignLetter):
            k_coproduct(Element.of(G))


class TestGeneralConstruction:
    def test_coproduct_matches_direct_on_generators(self):
        for el in (Element.of(b_plus(1)), Element.of(b_minus(2)),
                   Element.of(G), Element.one()):
            assert general_smash_coproduct(el) == smash_coproduct(el)

    def test_antipode_matches_direct_on_generators(self):
        for el in (Element.of(b_plus(1)), Element.of(b_minus(2)),
                   Element.of(G), Element.one()):
            assert general_smash_antipode(el) == smash_antipode(el)

    def test_cross_validation_suite(self):
        results = bosonise_cross_validation(max_len=2, max_index=2)
        assert all_passed(results)


class TestAxiomSuites:
    def test_g_extension(self):
        results = check_ordinary_hopf_axioms("pbg", max_len=2, max_index=2)
        assert all_passed(results)

    def test_k_extension(self):
        results = check_ordinary_hopf_axioms("pbk", max_len=2, max_index=2)
        assert all_passed(results)

    def test_quasitriangularity(self):
        results = check_quasitriangularity(max_len=2, max_index=2)
        assert all_passed(results)
        axioms = {r.axiom for r in results}
        assert {"r_conjugates_coproduct", "hexagon_coproduct_first_leg",
                "hexagon_coproduct_second_leg", "r_matrix_self_inverse"} <= axioms

    def test_conjugation_invariants_present(self):
        results = check_ordinary_hopf_axioms("pbk", max_len=1, max_index=1)
        axioms = {r.axiom for r in results}
        assert "grading_conjugation" in axioms
        assert "antipode_square_matches_conjugation" in axioms

    def test_r_conjugation_example(self):
        from parahopf.braided_hopf import R_MATRIX_CZ2

        dw = smash_coproduct(Element.of(b_plus(1)))
        conj = R_MATRIX_CZ2.multiply(dw, PARABOSON_G).multiply(
            R_MATRIX_CZ2, PARABOSON_G)
        assert conj == tens("I | B+1; B+1 | g")
