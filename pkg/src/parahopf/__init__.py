"""parahopf: exact symbolic engine for the parabosonic algebra, its
super-Hopf structure, its two ordinary Hopf extensions, and a truncated
Fock-space matrix oracle that independently verifies the symbolic layer."""

__version__ = "0.1.0"

from .terms import (Element, Generator, Scalar, Word, anticommutator_symbol,
                    b_letter, b_minus, b_plus, g_action, parity_decompose,
                    word, G, K_MINUS, K_PLUS, MINUS, PLUS)
from .grammar import ParseError, format_element, parse_element
from .rewriting import (AlgebraContext, ClosureFailure, ForeignLetter, BOSON,
                        FREE, PARABOSON, PARABOSON_G, PARABOSON_K, CONTEXTS,
                        anticommutator_bracket, anticommutator_bracket_table,
                        boson_relations, expand_anticommutators, normal_form,
                        paraboson_relation, paraboson_relations,
                        replacement_to_bosons)
from .tensors import TensorElement, tensor

__all__ = [
    "Element", "Generator", "Scalar", "Word", "anticommutator_symbol",
    "b_letter", "b_minus", "b_plus", "g_action", "parity_decompose", "word",
    "G", "K_MINUS", "K_PLUS", "MINUS", "PLUS",
    "ParseError", "format_element", "parse_element",
    "AlgebraContext", "ClosureFailure", "ForeignLetter",
    "FREE", "BOSON", "PARABOSON", "PARABOSON_G", "PARABOSON_K", "CONTEXTS",
    "anticommutator_bracket", "anticommutator_bracket_table",
    "boson_relations", "expand_anticommutators", "normal_form",
    "paraboson_relation", "paraboson_relations", "replacement_to_bosons",
    "TensorElement", "tensor",
]
