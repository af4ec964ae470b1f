"""Normal forms for the quotient algebras.

Each :class:`AlgebraContext` selects one terminating rewriting system on
adjacent letter pairs:

* ``free``   - no rules,
* ``boson``  - normal ordering for the canonical commutation relations,
* ``pb``     - a PBW-style normal form on the extended alphabet
  {anticommutator symbols (even)} + {B letters (odd)}.  Normal words are a
  nondecreasing run of E symbols followed by a strictly increasing run of
  B letters.  The rules are generated from the trilinear defining relations,
  not hand-entered:

    - B_a B_b (out of order or equal)  ->  -B_b B_a + E_ab, resp. E_aa / 2,
    - B_k E                            ->  E B_k - [E, B_k],
    - E E' (out of order)              ->  E' E + [E, E'],

  with [E, B] read off the defining relations and [E, E'] derived from them
  by expanding [E, {B, B'}] = {[E, B], B'} + {B, [E, B']},
* ``pbg`` / ``pbk`` - the pb rules plus group-like tails: g and K letters
  commute past E letters, anticommute past B letters, collect at the right
  end of the word, and cancel via g g -> I resp. K+ K- -> K- K+ -> I.

Termination: every rule strictly decreases the measure
(#B letters, #E letters, #group letters, #inversions in the letter order),
compared lexicographically.  The swap rules lower the inversion count, every
other rule lowers one of the letter counts first.  Confluence is inherited
from the PBW property of the underlying Lie superalgebra and is exercised by
the randomized-order tests rather than assumed.
"""

from __future__ import annotations

import random
from functools import lru_cache
from typing import Dict, Iterator, List, Optional, Tuple

from .terms import (HALF, MINUS, PLUS, Element, Generator, Scalar, Word,
                    anticommutator_symbol, b_letter, pair_symbol, word)


class ForeignLetter(ValueError):
    """A letter outside the alphabet of the requested context."""


class ClosureFailure(RuntimeError):
    """A derived bracket of two anticommutator symbols left their span.

    This cannot happen if the even part closes (it must); raising instead of
    ignoring keeps a transcription bug from silently corrupting normal forms.
    """


_ALPHABETS = {
    "free": {"B", "E", "g", "K+", "K-"},
    "boson": {"B"},
    "pb": {"B", "E"},
    "pbg": {"B", "E", "g"},
    "pbk": {"B", "E", "K+", "K-"},
}

_GROUP_KINDS = {"g", "K+", "K-"}


def eb_bracket(e: Generator, b: Generator) -> Element:
    """[E_{i xi, j eta}, B_k^eps] as a combination of single B letters.

    Read directly off the trilinear defining relations:
    (eps - eta) delta_{jk} B_i^xi + (eps - xi) delta_{ik} B_j^eta.
    """
    if e.kind != "E" or b.kind != "B":
        raise ValueError("eb_bracket expects an E symbol and a B letter")
    out = Element.zero()
    if b.i == e.j:
        out = out + Element.of(b_letter(e.i, e.xi)).scale(b.xi - e.eta)
    if b.i == e.i:
        out = out + Element.of(b_letter(e.j, e.eta)).scale(b.xi - e.xi)
    return out


@lru_cache(maxsize=None)
def anticommutator_bracket(e1: Generator, e2: Generator) -> Element:
    """[E1, E2] expressed in E symbols, derived from the defining relations
    via [E1, {B, B'}] = {[E1, B], B'} + {B, [E1, B']}."""
    if e1.kind != "E" or e2.kind != "E":
        raise ValueError("anticommutator_bracket expects two E symbols")
    first = b_letter(e2.i, e2.xi)
    second = b_letter(e2.j, e2.eta)
    acc = Element.zero()
    for inner, outer in ((first, second), (second, first)):
        for w, c in eb_bracket(e1, inner).terms.items():
            acc = acc + Element.of(pair_symbol(w.letters[0], outer)).scale(c)
    for w in acc.terms:
        if len(w) != 1 or w.letters[0].kind != "E":
            raise ClosureFailure(f"bracket [{e1}, {e2}] produced non-E word {w!r}")
    return acc


def anticommutator_bracket_table(max_index: int) -> Dict[Tuple[Generator, Generator], Element]:
    """The full pair-bracket table for all E symbols with indices <= max_index."""
    symbols = list(_e_symbols(max_index))
    return {(a, b): anticommutator_bracket(a, b) for a in symbols for b in symbols}


def _e_symbols(max_index: int) -> Iterator[Generator]:
    seen = set()
    for i in range(1, max_index + 1):
        for xi in (PLUS, MINUS):
            for j in range(1, max_index + 1):
                for eta in (PLUS, MINUS):
                    e = anticommutator_symbol(i, xi, j, eta)
                    if e not in seen:
                        seen.add(e)
                        yield e


class AlgebraContext:
    """Which quotient is in force; carries the (memoized) pair rules.

    Immutable after construction apart from internal memoization, so a single
    instance per kind is shared (see the module-level singletons).
    """

    def __init__(self, kind: str):
        if kind not in _ALPHABETS:
            raise ValueError(f"unknown context kind {kind!r}")
        self.kind = kind
        self._alphabet = _ALPHABETS[kind]
        self._pair_cache: Dict[Tuple[Generator, Generator], Optional[Element]] = {}

    def __repr__(self) -> str:
        return f"AlgebraContext({self.kind!r})"

    def allows(self, g: Generator) -> bool:
        return g.kind in self._alphabet

    def check_letters(self, a: Element) -> None:
        for w in a.terms:
            for g in w:
                if not self.allows(g):
                    raise ForeignLetter(f"letter {g.token()} not in the {self.kind} alphabet")

    def reduce_pair(self, x: Generator, y: Generator) -> Optional[Element]:
        """Replacement for the two-letter word x y, or None if it is normal."""
        key = (x, y)
        try:
            return self._pair_cache[key]
        except KeyError:
            result = self._reduce_pair(x, y)
            self._pair_cache[key] = result
            return result

    def _reduce_pair(self, x: Generator, y: Generator) -> Optional[Element]:
        if self.kind == "free":
            return None
        if self.kind == "boson":
            return _boson_pair(x, y)
        if x.kind in _GROUP_KINDS:
            return _group_pair(x, y, self.kind)
        return _pbw_pair(x, y)


def _boson_pair(x: Generator, y: Generator) -> Optional[Element]:
    # [b_i^-, b_j^+] = delta_ij, same-sign letters commute
    if x.xi == MINUS and y.xi == PLUS:
        swapped = Element.of(word(y, x))
        return swapped + 1 if x.i == y.i else swapped
    if x.xi == y.xi and x.i > y.i:
        return Element.of(word(y, x))
    return None


def _pbw_pair(x: Generator, y: Generator) -> Optional[Element]:
    if x.kind == "B":
        if y.kind == "B":
            if x == y:
                return Element.of(pair_symbol(x, y)).scale(HALF)
            if x.sort_key > y.sort_key:
                return Element.of(pair_symbol(x, y)) - Element.of(word(y, x))
            return None
        if y.kind == "E":
            return Element.of(word(y, x)) - eb_bracket(y, x)
    if x.kind == "E" and y.kind == "E" and x.sort_key > y.sort_key:
        return Element.of(word(y, x)) + anticommutator_bracket(x, y)
    return None


def _group_pair(x: Generator, y: Generator, kind: str) -> Optional[Element]:
    # group-like letters migrate to the right end of the word
    if y.kind in _GROUP_KINDS:
        if x.kind == "g" and y.kind == "g":
            return Element.one()
        if (x.kind, y.kind) in (("K+", "K-"), ("K-", "K+")):
            return Element.one()
        return None
    sign = -1 if y.parity else 1
    return Element.of(word(y, x)).scale(sign)


FREE = AlgebraContext("free")
BOSON = AlgebraContext("boson")
PARABOSON = AlgebraContext("pb")
PARABOSON_G = AlgebraContext("pbg")
PARABOSON_K = AlgebraContext("pbk")

CONTEXTS = {
    "free": FREE,
    "boson": BOSON,
    "pb": PARABOSON,
    "pbg": PARABOSON_G,
    "pbk": PARABOSON_K,
}


def normal_form(a, ctx: AlgebraContext, rng: Optional[random.Random] = None) -> Element:
    """The canonical representative of ``a`` in the quotient chosen by ``ctx``.

    Idempotent; ``a - normal_form(a)`` lies in the defining ideal.  With
    ``rng`` given, the rule application order is randomized at every step
    (used by the confluence evidence tests); the result must not depend on it.
    """
    element = Element.of(a)
    ctx.check_letters(element)
    if ctx.kind == "free":
        return element
    acc: Dict[Word, Scalar] = {}
    agenda: List[Tuple[Tuple[Generator, ...], Scalar]] = [
        (w.letters, c) for w, c in element.terms.items()
    ]
    while agenda:
        letters, coeff = agenda.pop()
        redex = _find_redex(letters, ctx, rng)
        if redex is None:
            prev = acc.get(Word(letters))
            total = coeff if prev is None else prev + coeff
            if total:
                acc[Word(letters)] = total
            else:
                acc.pop(Word(letters), None)
            continue
        pos, replacement = redex
        head, tail = letters[:pos], letters[pos + 2:]
        for w, c in replacement.terms.items():
            agenda.append((head + w.letters + tail, coeff * c))
    out = Element()
    out.terms = acc
    return out


def _find_redex(letters, ctx, rng):
    if rng is None:
        for q in range(len(letters) - 1):
            rep = ctx.reduce_pair(letters[q], letters[q + 1])
            if rep is not None:
                return q, rep
        return None
    candidates = []
    for q in range(len(letters) - 1):
        rep = ctx.reduce_pair(letters[q], letters[q + 1])
        if rep is not None:
            candidates.append((q, rep))
    if not candidates:
        return None
    return candidates[rng.randrange(len(candidates))]


def expand_anticommutators(a) -> Element:
    """Replace every E letter by the two-term ladder product it stands for.

    The result contains no E letters; exists for export and for feeding the
    matrix/boson oracles.  Inverse redundancy with the E-based normal forms
    is checked by tests, not assumed.
    """
    element = Element.of(a)
    out = Element.zero()
    for w, c in element.terms.items():
        prod = Element.one()
        for g in w:
            if g.kind == "E":
                first = b_letter(g.i, g.xi)
                second = b_letter(g.j, g.eta)
                factor = Element.of(word(first, second)) + Element.of(word(second, first))
            else:
                factor = Element.of(g)
            prod = prod * factor
        out = out + prod.scale(c)
    return out


def replacement_to_bosons(a) -> Element:
    """The image under the replacement map onto the bosonic quotient,
    returned in boson normal form.  E letters are expanded first; group-like
    letters have no image and raise ForeignLetter."""
    element = Element.of(a)
    for w in element.terms:
        for g in w:
            if g.kind in _GROUP_KINDS:
                raise ForeignLetter(f"letter {g.token()} has no bosonic image")
    return normal_form(expand_anticommutators(element), BOSON)


def paraboson_relation(i: int, xi: int, j: int, eta: int, k: int, eps: int,
                       use_symbol: bool = False) -> Element:
    """One generator of the defining ideal of the parabosonic quotient:
    [{B_i^xi, B_j^eta}, B_k^eps] - (eps - eta) d_jk B_i^xi - (eps - xi) d_ik B_j^eta.

    With ``use_symbol`` the anticommutator is the E letter itself; otherwise
    it is written out in ladder letters, as in the original presentation.
    """
    bi, bj, bk = b_letter(i, xi), b_letter(j, eta), b_letter(k, eps)
    if use_symbol:
        acomm = Element.of(pair_symbol(bi, bj))
    else:
        acomm = Element.of(word(bi, bj)) + Element.of(word(bj, bi))
    lhs = acomm * bk - Element.of(bk) * acomm
    rhs = Element.zero()
    if j == k:
        rhs = rhs + Element.of(bi).scale(eps - eta)
    if i == k:
        rhs = rhs + Element.of(bj).scale(eps - xi)
    return lhs - rhs


def paraboson_relations(max_index: int, use_symbol: bool = False) -> Iterator[Element]:
    """All defining-ideal generators with indices <= max_index (all eight
    sign choices, all index triples)."""
    rng = range(1, max_index + 1)
    for i in rng:
        for j in rng:
            for k in rng:
                for xi in (PLUS, MINUS):
                    for eta in (PLUS, MINUS):
                        for eps in (PLUS, MINUS):
                            yield paraboson_relation(i, xi, j, eta, k, eps, use_symbol)


def boson_relations(max_index: int) -> Iterator[Element]:
    """Generators of the bosonic ideal: [b_i^-, b_j^+] - d_ij, [b^-, b^-], [b^+, b^+]."""
    rng = range(1, max_index + 1)
    for i in rng:
        for j in rng:
            bm_i, bp_j = b_letter(i, MINUS), b_letter(j, PLUS)
            delta = 1 if i == j else 0
            yield Element.of(word(bm_i, bp_j)) - Element.of(word(bp_j, bm_i)) - delta
            bm_j = b_letter(j, MINUS)
            yield Element.of(word(bm_i, bm_j)) - Element.of(word(bm_j, bm_i))
            bp_i = b_letter(i, PLUS)
            yield Element.of(word(bp_i, bp_j)) - Element.of(word(bp_j, bp_i))
