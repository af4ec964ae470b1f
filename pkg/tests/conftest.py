"""Shared hypothesis strategies: random exact scalars, letters, words and
elements over a small index range."""

from fractions import Fraction

import hypothesis.strategies as st

from parahopf.terms import (MINUS, PLUS, Element, Scalar, Word,
                            anticommutator_symbol, b_letter)

signs = st.sampled_from([PLUS, MINUS])
indices = st.integers(min_value=1, max_value=3)

fractions = st.builds(Fraction,
                      st.integers(min_value=-12, max_value=12),
                      st.integers(min_value=1, max_value=8))

scalars = st.builds(Scalar, fractions, fractions)
nonzero_scalars = scalars.filter(bool)

b_letters = st.builds(b_letter, indices, signs)
e_letters = st.builds(anticommutator_symbol, indices, signs, indices, signs)
pb_letters = st.one_of(b_letters, e_letters)

pb_words = st.lists(pb_letters, max_size=4).map(lambda ls: Word(tuple(ls)))
b_words = st.lists(b_letters, max_size=5).map(lambda ls: Word(tuple(ls)))


def _element_from(pairs):
    out = Element.zero()
    for w, c in pairs:
        out = out + Element.of(w).scale(c)
    return out


pb_elements = st.lists(st.tuples(pb_words, scalars), max_size=4).map(_element_from)
b_elements = st.lists(st.tuples(b_words, scalars), max_size=4).map(_element_from)
