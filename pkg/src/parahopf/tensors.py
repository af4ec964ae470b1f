"""Formal tensor-square (and -cube) elements.

A :class:`TensorElement` is a finite map from word tuples to scalars; arity
2 covers coproducts and braided products, arity 3 covers the coassociativity
checks.  Slot words are always reducible independently, and the product can
be taken either plainly or with the Koszul sign rule
(a (x) b)(c (x) d) = (-1)^{|b||c|} ac (x) bd.
"""

from __future__ import annotations

from typing import Callable, Dict, Mapping, Tuple

from .terms import EMPTY_WORD, ONE, Element, Scalar, ScalarLike, Word
from .rewriting import AlgebraContext, normal_form

Key = Tuple[Word, ...]


class TensorElement:
    """Exact linear combination of tuples of words, canonical like Element."""

    __slots__ = ("arity", "terms")

    def __init__(self, arity: int, terms: Mapping[Key, ScalarLike] | None = None):
        self.arity = arity
        data: Dict[Key, Scalar] = {}
        if terms:
            for key, c in terms.items():
                if len(key) != arity:
                    raise ValueError(f"key {key!r} does not have arity {arity}")
                s = Scalar.of(c)
                if s:
                    data[key] = s
        self.terms = data

    @staticmethod
    def zero(arity: int = 2) -> "TensorElement":
        return TensorElement(arity)

    @staticmethod
    def unit(arity: int = 2) -> "TensorElement":
        return TensorElement(arity, {(EMPTY_WORD,) * arity: ONE})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self.arity == other.arity and self.terms == other.terms

    __hash__ = None

    def __add__(self, other: "TensorElement") -> "TensorElement":
        if self.arity != other.arity:
            raise ValueError("arity mismatch")
        acc = dict(self.terms)
        for key, c in other.terms.items():
            s = acc.get(key)
            s = c if s is None else s + c
            if s:
                acc[key] = s
            else:
                acc.pop(key, None)
        return _wrap(self.arity, acc)

    def __sub__(self, other: "TensorElement") -> "TensorElement":
        return self + (-other)

    def __neg__(self) -> "TensorElement":
        return TensorElement(self.arity, {k: -c for k, c in self.terms.items()})

    def scale(self, c: ScalarLike) -> "TensorElement":
        s = Scalar.of(c)
        if not s:
            return TensorElement(self.arity)
        return TensorElement(self.arity, {k: s * v for k, v in self.terms.items()})

    def multiply(self, other: "TensorElement", ctx: AlgebraContext,
                 braided: bool = False) -> "TensorElement":
        """Slotwise product, with the Koszul sign when ``braided``; the
        result is slotwise normal-formed in ``ctx``."""
        if self.arity != other.arity:
            raise ValueError("arity mismatch")
        acc: Dict[Key, Scalar] = {}
        for ka, ca in self.terms.items():
            for kb, cb in other.terms.items():
                c = ca * cb
                if braided:
                    crossings = sum(
                        ka[p].parity * kb[q].parity
                        for p in range(1, self.arity)
                        for q in range(p)
                    )
                    if crossings & 1:
                        c = -c
                key = tuple(wa * wb for wa, wb in zip(ka, kb))
                s = acc.get(key)
                s = c if s is None else s + c
                if s:
                    acc[key] = s
                else:
                    acc.pop(key, None)
        return _wrap(self.arity, acc).reduce_slots(ctx)

    def reduce_slots(self, ctx: AlgebraContext) -> "TensorElement":
        acc: Dict[Key, Scalar] = {}
        for key, c in self.terms.items():
            _distribute(acc, key, c, [normal_form(Element.of(w), ctx) for w in key])
        return _wrap(self.arity, acc)

    def map_slot(self, idx: int, fn: Callable[[Word], Element]) -> "TensorElement":
        """Apply an even linear map (given on words) to one slot."""
        acc: Dict[Key, Scalar] = {}
        for key, c in self.terms.items():
            image = fn(key[idx])
            for w, cw in image.terms.items():
                new_key = key[:idx] + (w,) + key[idx + 1:]
                s = acc.get(new_key)
                s = c * cw if s is None else s + c * cw
                if s:
                    acc[new_key] = s
                else:
                    acc.pop(new_key, None)
        return _wrap(self.arity, acc)

    def expand_slot(self, idx: int, fn: Callable[[Word], "TensorElement"]) -> "TensorElement":
        """Replace one slot by the arity-2 image of an even map (e.g. a
        coproduct); the arity grows by one."""
        acc: Dict[Key, Scalar] = {}
        for key, c in self.terms.items():
            image = fn(key[idx])
            for pair, cp in image.terms.items():
                new_key = key[:idx] + pair + key[idx + 1:]
                s = acc.get(new_key)
                s = c * cp if s is None else s + c * cp
                if s:
                    acc[new_key] = s
                else:
                    acc.pop(new_key, None)
        return _wrap(self.arity + 1, acc)

    def swap(self, braided: bool = False) -> "TensorElement":
        """Exchange the two slots, with the sign (-1)^{|a||b|} when braided."""
        if self.arity != 2:
            raise ValueError("swap is defined for arity 2")
        acc: Dict[Key, Scalar] = {}
        for (w1, w2), c in self.terms.items():
            if braided and w1.parity and w2.parity:
                c = -c
            acc[(w2, w1)] = acc.get((w2, w1), Scalar.of(0)) + c
        return _wrap(2, {k: v for k, v in acc.items() if v})

    def multiply_out(self, ctx: AlgebraContext) -> Element:
        """Concatenate the slots (the multiplication map) and normal-form."""
        out = Element.zero()
        for key, c in self.terms.items():
            w = EMPTY_WORD
            for part in key:
                w = w * part
            out = out + Element.of(w).scale(c)
        return normal_form(out, ctx)

    def scalar_slot(self, idx: int, fn: Callable[[Word], Scalar]) -> "TensorElement":
        """Contract one slot with a scalar-valued map (e.g. a counit)."""
        acc: Dict[Key, Scalar] = {}
        for key, c in self.terms.items():
            s = c * fn(key[idx])
            if not s:
                continue
            new_key = key[:idx] + key[idx + 1:]
            prev = acc.get(new_key)
            total = s if prev is None else prev + s
            if total:
                acc[new_key] = total
            else:
                acc.pop(new_key, None)
        return _wrap(self.arity - 1, acc)

    def to_element(self) -> Element:
        """View an arity-1 tensor as a plain element."""
        if self.arity != 1:
            raise ValueError("to_element needs arity 1")
        out = Element.zero()
        for (w,), c in self.terms.items():
            out = out + Element.of(w).scale(c)
        return out

    def __repr__(self) -> str:
        from .grammar import format_scalar, format_word

        if not self.terms:
            return "0"
        keys = sorted(self.terms,
                      key=lambda k: tuple((-len(w), w.sort_key[1]) for w in k))
        parts = []
        for key in keys:
            c = self.terms[key]
            body = " (x) ".join(format_word(w) for w in key)
            parts.append(body if c == ONE else f"{format_scalar(c)} {body}")
        return " + ".join(parts)


def _wrap(arity: int, acc: Dict[Key, Scalar]) -> TensorElement:
    t = TensorElement(arity)
    t.terms = acc
    return t


def _distribute(acc: Dict[Key, Scalar], key: Key, c: Scalar, slot_elements) -> None:
    def rec(idx: int, prefix: Tuple[Word, ...], coeff: Scalar) -> None:
        if idx == len(slot_elements):
            s = acc.get(prefix)
            s = coeff if s is None else s + coeff
            if s:
                acc[prefix] = s
            else:
                acc.pop(prefix, None)
            return
        for w, cw in slot_elements[idx].terms.items():
            rec(idx + 1, prefix + (w,), coeff * cw)

    rec(0, (), c)


def tensor(*factors: Element) -> TensorElement:
    """The plain tensor product of elements (no signs)."""
    arity = len(factors)
    out = TensorElement(arity, {(EMPTY_WORD,) * arity: ONE})
    acc: Dict[Key, Scalar] = {(): ONE}
    for f in factors:
        new_acc: Dict[Key, Scalar] = {}
        for key, c in acc.items():
            for w, cw in f.terms.items():
                new_acc[key + (w,)] = new_acc.get(key + (w,), Scalar.of(0)) + c * cw
        acc = {k: v for k, v in new_acc.items() if v}
    out.terms = acc
    return out
