"""Word enumeration and the seeded random-word sampler.

The axiom checkers enumerate exhaustively over the ladder letters plus the
context's group-like letters.  The sampler used by the oracle and the
confluence evidence additionally mixes in the anticommutator symbols; it
draws the length uniformly from [1, max_len] and then each letter uniformly
from the alphabet, so a (context, max_len, max_index, seed) quadruple fully
determines the sample.
"""

from __future__ import annotations

import itertools
import random
from typing import Iterator, List, Sequence

from .terms import (MINUS, PLUS, Generator, Word, anticommutator_symbol,
                    b_letter, G, K_MINUS, K_PLUS)

_GROUP_LETTERS = {
    "free": [],
    "boson": [],
    "pb": [],
    "pbg": [G],
    "pbk": [K_PLUS, K_MINUS],
}


def b_alphabet(max_index: int) -> List[Generator]:
    out = []
    for i in range(1, max_index + 1):
        out.append(b_letter(i, PLUS))
        out.append(b_letter(i, MINUS))
    return out


def e_alphabet(max_index: int) -> List[Generator]:
    seen = []
    for i in range(1, max_index + 1):
        for xi in (PLUS, MINUS):
            for j in range(1, max_index + 1):
                for eta in (PLUS, MINUS):
                    e = anticommutator_symbol(i, xi, j, eta)
                    if e not in seen:
                        seen.append(e)
    return seen


def check_alphabet(ctx_key: str, max_index: int) -> List[Generator]:
    """Ladder letters plus the context's group-like letters (no E symbols);
    the alphabet the exhaustive axiom checkers run over."""
    return b_alphabet(max_index) + _GROUP_LETTERS[ctx_key]


def sampling_alphabet(ctx_key: str, max_index: int) -> List[Generator]:
    """The full context alphabet, anticommutator symbols included."""
    letters = b_alphabet(max_index)
    if ctx_key in ("pb", "pbg", "pbk", "free"):
        letters += e_alphabet(max_index)
    return letters + _GROUP_LETTERS.get(ctx_key, [])


def words_up_to(alphabet: Sequence[Generator], max_len: int,
                min_len: int = 1) -> Iterator[Word]:
    for length in range(min_len, max_len + 1):
        for combo in itertools.product(alphabet, repeat=length):
            yield Word(combo)


def sample_words(ctx_key: str, max_len: int, max_index: int, count: int,
                 rng: random.Random) -> List[Word]:
    alphabet = sampling_alphabet(ctx_key, max_index)
    out = []
    for _ in range(count):
        length = rng.randint(1, max_len)
        out.append(Word(tuple(rng.choice(alphabet) for _ in range(length))))
    return out


def oracle_sample_words(ctx_key: str, max_len: int, max_index: int, count: int,
                        rng: random.Random) -> List[Word]:
    """Sampler for the matrix-oracle comparisons: ladder plus group-like
    letters only, so every sampled word keeps a nonempty truncation guard at
    the default cutoffs.  Anticommutator symbols are exercised separately at
    shorter lengths (they count double against the guard)."""
    alphabet = check_alphabet(ctx_key, max_index)
    out = []
    for _ in range(count):
        length = rng.randint(1, max_len)
        out.append(Word(tuple(rng.choice(alphabet) for _ in range(length))))
    return out
