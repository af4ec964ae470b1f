import pytest

from parahopf.grammar import parse_element
from parahopf.rewriting import PARABOSON
from parahopf.tensors import TensorElement, tensor
from parahopf.terms import EMPTY_WORD, Element, b_plus, word


def pair(left, right):
    return tensor(parse_element(left), parse_element(right))


class TestBasics:
    def test_canonical_zero_drop(self):
        t = pair("B+1", "I") - pair("B+1", "I")
        assert t.is_zero()
        assert t == TensorElement.zero(2)

    def test_unit(self):
        x = pair("B+1", "B-2")
        assert TensorElement.unit(2).multiply(x, PARABOSON) == x

    def test_arity_mismatch_rejected(self):
        with pytest.raises(ValueError):
            TensorElement.unit(2) + TensorElement.unit(3)
        with pytest.raises(ValueError):
            TensorElement(2, {(EMPTY_WORD,): 1})

    def test_tensor_of_sums_distributes(self):
        a = parse_element("B+1 + B-1")
        b = parse_element("B+2 - I")
        t = tensor(a, b)
        assert len(t.terms) == 4


class TestSlotOperations:
    def test_swap_with_sign(self):
        t = pair("B+1", "B+2")
        assert t.swap(braided=True) == pair("B+2", "B+1").scale(-1)
        assert t.swap(braided=False) == pair("B+2", "B+1")
        even = pair("I", "B+2")
        assert even.swap(braided=True) == pair("B+2", "I")

    def test_reduce_slots(self):
        raw = pair("B-1 B+1", "I")
        reduced = raw.reduce_slots(PARABOSON)
        assert reduced == tensor(parse_element("E(1+,1-) - B+1 B-1"),
                                 Element.one())

    def test_multiply_out(self):
        t = pair("B+1", "B-1") + pair("I", "I")
        got = t.multiply_out(PARABOSON)
        assert got == parse_element("B+1 B-1 + I")

    def test_scalar_slot_contracts(self):
        t = pair("I", "B+1") + pair("B+1", "I").scale(2)
        picked = t.scalar_slot(0, lambda w: Element.of(w).coefficient(EMPTY_WORD))
        assert picked.arity == 1
        assert picked.to_element() == Element.of(b_plus(1))

    def test_expand_slot_grows_arity(self):
        t = pair("B+1", "I")
        grown = t.expand_slot(0, lambda w: pair("I", repr(w)))
        assert grown.arity == 3
        assert grown == TensorElement(
            3, {(EMPTY_WORD, word(b_plus(1)), EMPTY_WORD): 1})
