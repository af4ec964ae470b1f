"""Exact scalars, the generator alphabet, words and formal linear combinations.

Everything downstream (rewriting, Hopf structure maps, the matrix oracle)
consumes the value types defined here.  All values are immutable and all
operations are pure functions, so they can be shared freely.

Conventions:

* signs are the integers +1 / -1 (``PLUS`` / ``MINUS``),
* parity is 0 (even) or 1 (odd); raising/lowering letters are odd, the
  anticommutator symbols and the group-like letters are even,
* an ``Element`` is a finite map word -> scalar with no stored zeros, so
  equality of elements is equality of dicts.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Mapping, Tuple, Union

PLUS = 1
MINUS = -1

_F0 = Fraction(0)
_F1 = Fraction(1)

ScalarLike = Union["Scalar", int, Fraction]


@dataclass(frozen=True)
class Scalar:
    """A Gaussian rational re + im*i.  Arithmetic never rounds."""

    re: Fraction = _F0
    im: Fraction = _F0

    @staticmethod
    def of(value: ScalarLike) -> "Scalar":
        if isinstance(value, Scalar):
            return value
        if isinstance(value, (int, Fraction)):
            return Scalar(Fraction(value), _F0)
        raise TypeError(f"cannot interpret {value!r} as an exact scalar")

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def __add__(self, other: ScalarLike) -> "Scalar":
        o = Scalar.of(other)
        return Scalar(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other: ScalarLike) -> "Scalar":
        o = Scalar.of(other)
        return Scalar(self.re - o.re, self.im - o.im)

    def __rsub__(self, other: ScalarLike) -> "Scalar":
        return Scalar.of(other) - self

    def __neg__(self) -> "Scalar":
        return Scalar(-self.re, -self.im)

    def __mul__(self, other: ScalarLike) -> "Scalar":
        o = Scalar.of(other)
        return Scalar(self.re * o.re - self.im * o.im,
                      self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other: ScalarLike) -> "Scalar":
        o = Scalar.of(other)
        norm = o.re * o.re + o.im * o.im
        if not norm:
            raise ZeroDivisionError("division by zero scalar")
        return Scalar((self.re * o.re + self.im * o.im) / norm,
                      (self.im * o.re - self.re * o.im) / norm)

    def __rtruediv__(self, other: ScalarLike) -> "Scalar":
        return Scalar.of(other) / self

    def conjugate(self) -> "Scalar":
        return Scalar(self.re, -self.im)

    def __complex__(self) -> complex:
        return float(self.re) + 1j * float(self.im)


ZERO = Scalar()
ONE = Scalar(_F1)
IMAG = Scalar(_F0, _F1)
HALF = Scalar(Fraction(1, 2))


def _sign_rank(s: int) -> int:
    # raising (+) sorts before lowering (-)
    return 0 if s > 0 else 1


@dataclass(frozen=True)
class Generator:
    """One letter of the alphabet.

    ``kind`` is one of ``"B"`` (ladder letter, uses ``i``/``xi``), ``"E"``
    (anticommutator symbol, uses all four index/sign fields, stored in a
    canonical orientation), ``"g"``, ``"K+"``, ``"K-"``.
    """

    kind: str
    i: int = 0
    xi: int = 0
    j: int = 0
    eta: int = 0

    @property
    def parity(self) -> int:
        return 1 if self.kind == "B" else 0

    @property
    def sort_key(self) -> Tuple[int, int, int, int]:
        # total letter order: E symbols < B letters < g < K+ < K-
        if self.kind == "E":
            cls = _sign_rank(self.xi) + _sign_rank(self.eta)
            return (0, cls, self.i, self.j)
        if self.kind == "B":
            return (1, _sign_rank(self.xi), self.i, 0)
        return ({"g": 2, "K+": 3, "K-": 4}[self.kind], 0, 0, 0)

    def token(self) -> str:
        if self.kind == "B":
            return f"B{'+' if self.xi > 0 else '-'}{self.i}"
        if self.kind == "E":
            si = "+" if self.xi > 0 else "-"
            sj = "+" if self.eta > 0 else "-"
            return f"E({self.i}{si},{self.j}{sj})"
        return self.kind

    def __repr__(self) -> str:
        return self.token()


def _check_sign(s: int) -> int:
    if s not in (PLUS, MINUS):
        raise ValueError(f"sign must be +1 or -1, got {s}")
    return s


def _check_index(i: int) -> int:
    if not isinstance(i, int) or i < 0:
        raise ValueError(f"mode index must be a nonnegative integer, got {i}")
    return i


def b_letter(i: int, sign: int) -> Generator:
    return Generator("B", i=_check_index(i), xi=_check_sign(sign))


def b_plus(i: int) -> Generator:
    return b_letter(i, PLUS)


def b_minus(i: int) -> Generator:
    return b_letter(i, MINUS)


def anticommutator_symbol(i: int, xi: int, j: int, eta: int) -> Generator:
    """The symbol standing for {B_i^xi, B_j^eta}; {x,y} = {y,x} fixes the
    stored orientation to (sign, index) nondecreasing."""
    _check_index(i), _check_sign(xi), _check_index(j), _check_sign(eta)
    if (_sign_rank(xi), i) > (_sign_rank(eta), j):
        i, xi, j, eta = j, eta, i, xi
    return Generator("E", i=i, xi=xi, j=j, eta=eta)


def pair_symbol(a: Generator, b: Generator) -> Generator:
    """Anticommutator symbol of two B letters."""
    if a.kind != "B" or b.kind != "B":
        raise ValueError("anticommutator symbols are built from B letters")
    return anticommutator_symbol(a.i, a.xi, b.i, b.xi)


G = Generator("g")
K_PLUS = Generator("K+")
K_MINUS = Generator("K-")


@dataclass(frozen=True)
class Word:
    """A finite product of letters; the empty word is the unit I."""

    letters: Tuple[Generator, ...] = ()

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Generator]:
        return iter(self.letters)

    def __mul__(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters)

    @property
    def parity(self) -> int:
        return sum(g.parity for g in self.letters) & 1

    @property
    def sort_key(self):
        # length-then-lex; used for deterministic printing
        return (len(self.letters), tuple(g.sort_key for g in self.letters))

    def __repr__(self) -> str:
        return " ".join(g.token() for g in self.letters) if self.letters else "I"


EMPTY_WORD = Word()


def word(*letters: Generator) -> Word:
    return Word(tuple(letters))


ElementLike = Union["Element", Word, Generator, ScalarLike]


class Element:
    """Exact formal linear combination of words.

    Canonical: zero coefficients are never stored, so ``==`` is structural
    equality of the underlying maps.  Instances are immutable by contract.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Word, ScalarLike] | None = None):
        data = {}
        if terms:
            for w, c in terms.items():
                s = Scalar.of(c)
                if s:
                    data[w] = s
        self.terms = data

    @staticmethod
    def zero() -> "Element":
        return Element()

    @staticmethod
    def one() -> "Element":
        return Element({EMPTY_WORD: ONE})

    @staticmethod
    def of(x: ElementLike) -> "Element":
        if isinstance(x, Element):
            return x
        if isinstance(x, Word):
            return Element({x: ONE})
        if isinstance(x, Generator):
            return Element({word(x): ONE})
        return Element({EMPTY_WORD: Scalar.of(x)})

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, w: Word) -> Scalar:
        return self.terms.get(w, ZERO)

    def __eq__(self, other) -> bool:
        if not isinstance(other, (Element, Word, Generator, int, Fraction, Scalar)):
            return NotImplemented
        return self.terms == Element.of(other).terms

    __hash__ = None  # mutable dict inside; elements are compared, not hashed

    def __add__(self, other: ElementLike) -> "Element":
        o = Element.of(other)
        acc = dict(self.terms)
        for w, c in o.terms.items():
            _acc(acc, w, c)
        return _from_acc(acc)

    __radd__ = __add__

    def __sub__(self, other: ElementLike) -> "Element":
        return self + (-Element.of(other))

    def __rsub__(self, other: ElementLike) -> "Element":
        return Element.of(other) + (-self)

    def __neg__(self) -> "Element":
        return Element({w: -c for w, c in self.terms.items()})

    def scale(self, c: ScalarLike) -> "Element":
        s = Scalar.of(c)
        if not s:
            return Element.zero()
        return Element({w: s * v for w, v in self.terms.items()})

    def __mul__(self, other: ElementLike) -> "Element":
        if isinstance(other, (int, Fraction, Scalar)):
            return self.scale(other)
        o = Element.of(other)
        acc: dict = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in o.terms.items():
                _acc(acc, w1 * w2, c1 * c2)
        return _from_acc(acc)

    def __rmul__(self, other: ElementLike) -> "Element":
        if isinstance(other, (int, Fraction, Scalar)):
            return self.scale(other)
        return Element.of(other) * self

    def __repr__(self) -> str:
        from .grammar import format_element

        return format_element(self)


def _acc(acc: dict, w: Word, c: Scalar) -> None:
    s = acc.get(w)
    s = c if s is None else s + c
    if s:
        acc[w] = s
    else:
        acc.pop(w, None)


def _from_acc(acc: dict) -> Element:
    el = Element()
    el.terms = acc
    return el


def parity_decompose(a: Element) -> Tuple[Element, Element]:
    """Split into (even part, odd part); the two sum back to ``a`` exactly."""
    even: dict = {}
    odd: dict = {}
    for w, c in a.terms.items():
        (odd if w.parity else even)[w] = c
    return _from_acc(even), _from_acc(odd)


def g_action(a: Element) -> Element:
    """The grading automorphism: fixes the even part, negates the odd part."""
    return Element({w: (-c if w.parity else c) for w, c in a.terms.items()})
