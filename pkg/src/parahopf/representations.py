"""Truncated Fock-space matrix realizations: the numerical oracle.

A ladder letter of order p is realized as the sum of p component ladders,

    B_i^+  =  sum_alpha  Gamma_alpha (x) a_{i,alpha}^+,

where the boson factors are truncated to ``cutoff`` levels per mode and the
Gamma_alpha are a Jordan-Wigner chain over ceil(p/2) two-level factors
(Z..Z X / Z..Z Y strings): mutually anticommuting involutions, so component
ladders with different alpha anticommute while each component is an honest
truncated boson.  Total dimension 2^ceil(p/2) * cutoff^(n p).

Truncation guard: a word of length L is trusted only on basis states whose
every mode occupancy is at most cutoff - L; ``guard_mask`` returns that
column mask and every comparison here restricts to it, which excludes
cutoff artifacts deterministically.

The number operator is half the sum of the ladder anticommutators; it is
diagonal with vacuum eigenvalue n p / 2, and K+/K- are its diagonal
exponentials exp(+-i pi N).  The grading letter g is realized with the
shifted exponent exp(i pi (N - n p / 2)) so that g^2 = 1 holds on guarded
states for every (n, p); without the shift that would fail for odd n p.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from .report import CheckResult
from .rewriting import (CONTEXTS, PARABOSON, normal_form, boson_relations,
                        paraboson_relation)
from .grammar import format_word
from .terms import (MINUS, PLUS, Element, Generator, Scalar, Word,
                    anticommutator_symbol, b_letter)

DEFAULT_DIMENSION_CAP = 20000
DIM_CAP_ENV = "PARAHOPF_DIM_CAP"

TOL_DIRECT = 1e-10     # directly constructed identities
TOL_COMPOSED = 1e-9    # compositions / normal-form comparisons
TOL_UNITARY = 1e-12    # diagonal unitary cancellations


class DimensionOverflow(ValueError):
    """Requested representation exceeds the configured dimension cap."""


class UnrepresentableLetter(ValueError):
    """A letter with no matrix assignment in the given representation."""


def dimension_cap(default: int = DEFAULT_DIMENSION_CAP) -> int:
    raw = os.environ.get(DIM_CAP_ENV)
    return int(raw) if raw else default


@dataclass(frozen=True)
class FockSpec:
    """Truncated Fock-space shape: n modes, order p, per-mode cutoff."""

    n: int = 1
    p: int = 1
    cutoff: int = 6

    def __post_init__(self):
        if self.n < 1 or self.p < 1 or self.cutoff < 2:
            raise ValueError("need n >= 1, p >= 1, cutoff >= 2")

    @property
    def sign_factors(self) -> int:
        return (self.p + 1) // 2

    @property
    def boson_factors(self) -> int:
        return self.n * self.p

    @property
    def dim(self) -> int:
        return (2 ** self.sign_factors) * self.cutoff ** self.boson_factors


_X = np.array([[0, 1], [1, 0]], dtype=complex)
_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
_Z = np.array([[1, 0], [0, -1]], dtype=complex)


def _kron_all(mats: Sequence[np.ndarray]) -> np.ndarray:
    out = np.array([[1.0 + 0j]])
    for m in mats:
        out = np.kron(out, m)
    return out


def _gamma(alpha: int, qubits: int) -> np.ndarray:
    # alpha-th Clifford generator on the sign space (0-based)
    site, which = divmod(alpha, 2)
    mats = [_Z] * site + [_X if which == 0 else _Y] + [np.eye(2, dtype=complex)] * (qubits - site - 1)
    return _kron_all(mats)


class MatrixRep:
    """Matrix assignment letter -> complex matrix on a truncated Fock space.

    Immutable after construction apart from memoized derived matrices
    (anticommutator symbols, the diagonal group-like letters).
    """

    def __init__(self, spec: FockSpec, dim_cap: Optional[int] = None):
        cap = dimension_cap() if dim_cap is None else dim_cap
        if spec.dim > cap:
            raise DimensionOverflow(
                f"dimension {spec.dim} exceeds the cap {cap}")
        self.spec = spec
        d = spec.cutoff
        lower = np.diag(np.sqrt(np.arange(1, d)), 1).astype(complex)
        raise_m = lower.conj().T
        sign_dim = 2 ** spec.sign_factors
        boson_eyes = [np.eye(d, dtype=complex)] * spec.boson_factors

        self._b_plus: Dict[int, np.ndarray] = {}
        for i in range(1, spec.n + 1):
            total = np.zeros((spec.dim, spec.dim), dtype=complex)
            for alpha in range(spec.p):
                mats = list(boson_eyes)
                mats[alpha * spec.n + (i - 1)] = raise_m
                total += np.kron(_gamma(alpha, spec.sign_factors), _kron_all(mats))
            self._b_plus[i] = total

        # occupancy table: per basis state, the occupancy of each boson factor
        boson_dim = d ** spec.boson_factors
        occ = np.zeros((boson_dim, spec.boson_factors), dtype=int)
        idx = np.arange(boson_dim)
        for f in range(spec.boson_factors):
            occ[:, f] = (idx // d ** (spec.boson_factors - 1 - f)) % d
        self.occupancies = np.tile(occ, (sign_dim, 1))
        self._cache: Dict[Generator, np.ndarray] = {}
        self._number: Optional[np.ndarray] = None

    @property
    def dim(self) -> int:
        return self.spec.dim

    def identity(self) -> np.ndarray:
        return np.eye(self.dim, dtype=complex)

    def vacuum(self) -> np.ndarray:
        v = np.zeros(self.dim, dtype=complex)
        v[0] = 1.0
        return v

    def guard_mask(self, length: int) -> np.ndarray:
        """Columns (basis states) on which a word of the given length acts
        without truncation artifacts."""
        return (self.occupancies <= self.spec.cutoff - length).all(axis=1)

    def number_matrix(self) -> np.ndarray:
        if self._number is None:
            total = np.zeros((self.dim, self.dim), dtype=complex)
            for i in range(1, self.spec.n + 1):
                bp = self._b_plus[i]
                bm = bp.conj().T
                total += bp @ bm + bm @ bp
            self._number = total / 2
        return self._number

    def matrix(self, g: Generator) -> np.ndarray:
        if g.kind == "B":
            if g.i not in self._b_plus:
                raise UnrepresentableLetter(
                    f"mode {g.i} outside this {self.spec.n}-mode representation")
            bp = self._b_plus[g.i]
            return bp if g.xi > 0 else bp.conj().T
        cached = self._cache.get(g)
        if cached is not None:
            return cached
        if g.kind == "E":
            a = self.matrix(b_letter(g.i, g.xi))
            b = self.matrix(b_letter(g.j, g.eta))
            out = a @ b + b @ a
        elif g.kind in ("K+", "K-"):
            diag = np.diag(self.number_matrix()).real
            out = np.diag(np.exp((1j if g.kind == "K+" else -1j) * math.pi * diag))
        elif g.kind == "g":
            diag = np.diag(self.number_matrix()).real
            shift = self.spec.n * self.spec.p / 2
            out = np.diag(np.exp(1j * math.pi * (diag - shift)))
        else:
            raise UnrepresentableLetter(f"letter {g.token()} has no matrix here")
        self._cache[g] = out
        return out


def build_green_ansatz(spec: FockSpec, dim_cap: Optional[int] = None) -> MatrixRep:
    return MatrixRep(spec, dim_cap)


def represent(a, rep: MatrixRep) -> np.ndarray:
    """Linear, multiplicative evaluation of an element in the representation."""
    element = Element.of(a)
    out = np.zeros((rep.dim, rep.dim), dtype=complex)
    for w, c in element.terms.items():
        m = rep.identity()
        for g in w:
            m = m @ rep.matrix(g)
        out += complex(c) * m
    return out


def number_operator(rep: MatrixRep) -> np.ndarray:
    return rep.number_matrix()


def k_matrices(rep: MatrixRep) -> Tuple[np.ndarray, np.ndarray]:
    return rep.matrix(Generator("K+")), rep.matrix(Generator("K-"))


def guarded_max_diff(m1: np.ndarray, m2: np.ndarray, mask: np.ndarray) -> float:
    if not mask.any():
        raise ValueError("empty guard; raise the cutoff")
    return float(np.abs((m1 - m2)[:, mask]).max())


def matrix_to_json(m: np.ndarray) -> list:
    """Row-major nested lists of [re, im] pairs, for external inspection."""
    return [[[float(z.real), float(z.imag)] for z in row] for row in m]


def matrix_from_json(data: list) -> np.ndarray:
    return np.array([[complex(re, im) for re, im in row] for row in data])


def _tol_result(axiom: str, name: str, err: float, tol: float,
                context: str = "") -> CheckResult:
    return CheckResult(axiom=axiom, word=name,
                       status="pass" if err <= tol else "fail",
                       lhs=f"max_err={err:.3e}", rhs=f"tol={tol:.0e}",
                       context=context)


def verify_defining_relations(rep: MatrixRep, max_index: Optional[int] = None
                              ) -> List[CheckResult]:
    """All trilinear defining relations vanish on the guarded subspace, the
    two ladder matrices are mutual adjoints, the vacuum carries order p, and
    for p = 1 the canonical commutation relations hold."""
    n = rep.spec.n if max_index is None else min(max_index, rep.spec.n)
    zero = np.zeros((rep.dim, rep.dim), dtype=complex)
    mask3 = rep.guard_mask(3)
    results = []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            for k in range(1, n + 1):
                for xi in (PLUS, MINUS):
                    for eta in (PLUS, MINUS):
                        for eps in (PLUS, MINUS):
                            rel = paraboson_relation(i, xi, j, eta, k, eps)
                            err = guarded_max_diff(represent(rel, rep), zero, mask3)
                            name = (f"rel({i}{'+' if xi > 0 else '-'},"
                                    f"{j}{'+' if eta > 0 else '-'};"
                                    f"{k}{'+' if eps > 0 else '-'})")
                            results.append(_tol_result(
                                "defining_relation", name, err, TOL_DIRECT, "oracle"))
    for i in range(1, n + 1):
        bp = rep.matrix(b_letter(i, PLUS))
        bm = rep.matrix(b_letter(i, MINUS))
        err = float(np.abs(bp - bm.conj().T).max())
        results.append(_tol_result("ladder_adjointness", f"mode {i}", err,
                                   TOL_UNITARY, "oracle"))

    # vacuum order: B_i^- B_j^+ |0> = p delta_ij |0>
    vac = rep.vacuum()
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            got = rep.matrix(b_letter(i, MINUS)) @ (rep.matrix(b_letter(j, PLUS)) @ vac)
            expect = (rep.spec.p if i == j else 0) * vac
            err = float(np.abs(got - expect).max())
            results.append(_tol_result("vacuum_order", f"modes {i},{j}", err,
                                       TOL_DIRECT, "oracle"))

    if rep.spec.p == 1:
        mask2 = rep.guard_mask(2)
        for idx, rel in enumerate(boson_relations(n)):
            err = guarded_max_diff(represent(rel, rep), zero, mask2)
            results.append(_tol_result("boson_degeneration", f"ccr[{idx}]",
                                       err, TOL_DIRECT, "oracle"))
    return results


def number_operator_element(n: int) -> Element:
    """The number operator as a symbolic element: half the sum of the mode
    anticommutator symbols over the first n modes."""
    out = Element.zero()
    for i in range(1, n + 1):
        out = out + Element.of(anticommutator_symbol(i, PLUS, i, MINUS))
    return out.scale(Scalar.of(1) / 2)


def verify_number_commutators(rep: MatrixRep, m_max: int = 4,
                              symbolic_m_max: int = 3,
                              symbolic_n_max: int = 2) -> List[CheckResult]:
    """[N^m, B_i^+] = B_i^+ ((N+1)^m - N^m), numerically for m <= m_max on
    the guarded subspace and symbolically (exact zero normal form) for
    m <= symbolic_m_max, n <= symbolic_n_max.

    The numerical guard is occupancy <= cutoff - 3: the number matrix is
    exactly diagonal below the top level, so the identity only needs one
    trustworthy raising step, not one per factor of N.
    """
    results = []
    nmat = number_operator(rep)
    mask = rep.guard_mask(3)
    ident = rep.identity()
    offdiag = nmat - np.diag(np.diag(nmat))
    results.append(_tol_result("number_operator_diagonal", "N",
                               float(np.abs(offdiag).max()), TOL_UNITARY, "oracle"))
    vac_val = float(np.real(nmat[0, 0]))
    expect = rep.spec.n * rep.spec.p / 2
    results.append(_tol_result("number_vacuum_eigenvalue",
                               f"n p / 2 = {expect}",
                               abs(vac_val - expect), TOL_DIRECT, "oracle"))
    for m in range(1, m_max + 1):
        nm = np.linalg.matrix_power(nmat, m)
        np1m = np.linalg.matrix_power(nmat + ident, m)
        for i in range(1, rep.spec.n + 1):
            bp = rep.matrix(b_letter(i, PLUS))
            lhs = nm @ bp - bp @ nm
            rhs = bp @ (np1m - nm)
            err = guarded_max_diff(lhs, rhs, mask)
            results.append(_tol_result("number_power_commutator",
                                       f"m={m} mode={i}", err, TOL_COMPOSED,
                                       "oracle"))

    for n in range(1, symbolic_n_max + 1):
        nel = number_operator_element(n)
        for m in range(1, symbolic_m_max + 1):
            nm_el = Element.one()
            np1m_el = Element.one()
            for _ in range(m):
                nm_el = nm_el * nel
                np1m_el = np1m_el * (nel + 1)
            for i in range(1, n + 1):
                bp = Element.of(b_letter(i, PLUS))
                diff = (nm_el * bp - bp * nm_el) - bp * (np1m_el - nm_el)
                ok = normal_form(diff, PARABOSON).is_zero()
                results.append(CheckResult(
                    axiom="number_power_commutator_symbolic",
                    word=f"m={m} n={n} mode={i}",
                    status="pass" if ok else "fail",
                    lhs="0" if ok else repr(normal_form(diff, PARABOSON)),
                    rhs="0", context="oracle"))
    return results


def verify_k_identities(rep: MatrixRep) -> List[CheckResult]:
    """K+ and K- anticommute with every ladder matrix on the guarded
    subspace, are mutually inverse everywhere, and K+^2 = exp(2 i pi N),
    which is the identity exactly when n p is even (recorded, not asserted)."""
    results = []
    kp, km = k_matrices(rep)
    ident = rep.identity()
    for name, prod in (("K+ K-", kp @ km), ("K- K+", km @ kp)):
        err = float(np.abs(prod - ident).max())
        results.append(_tol_result("k_mutually_inverse", name, err,
                                   TOL_UNITARY, "oracle"))
    mask = rep.guard_mask(3)
    for i in range(1, rep.spec.n + 1):
        for s in (PLUS, MINUS):
            b = rep.matrix(b_letter(i, s))
            for kname, kmat in (("K+", kp), ("K-", km)):
                err = guarded_max_diff(kmat @ b + b @ kmat,
                                       np.zeros_like(b), mask)
                results.append(_tol_result(
                    "k_anticommutes_ladder",
                    f"{{{kname}, B{'+' if s > 0 else '-'}{i}}}", err,
                    TOL_DIRECT, "oracle"))
    diag = np.diag(rep.number_matrix()).real
    expected_sq = np.diag(np.exp(2j * math.pi * diag))
    err = float(np.abs(kp @ kp - expected_sq).max())
    results.append(_tol_result("k_square_is_number_exponential", "K+^2",
                               err, TOL_UNITARY, "oracle"))
    mask2 = rep.guard_mask(2)
    sq_err = guarded_max_diff(kp @ kp, ident, mask2)
    is_identity = sq_err <= TOL_DIRECT
    parity_even = (rep.spec.n * rep.spec.p) % 2 == 0
    results.append(CheckResult(
        axiom="k_square_identity_iff_np_even",
        word=f"n p = {rep.spec.n * rep.spec.p}",
        status="pass" if is_identity == parity_even else "fail",
        lhs=f"K+^2 == 1: {is_identity}", rhs=f"n p even: {parity_even}",
        context="oracle"))
    return results


def verify_grading_letter(rep: MatrixRep) -> List[CheckResult]:
    """The shifted-exponent grading matrix squares to the identity and
    anticommutes with the ladder matrices on the guarded subspace."""
    results = []
    gmat = rep.matrix(Generator("g"))
    mask2 = rep.guard_mask(2)
    err = guarded_max_diff(gmat @ gmat, rep.identity(), mask2)
    results.append(_tol_result("grading_letter_involution", "g^2", err,
                               TOL_DIRECT, "oracle"))
    mask3 = rep.guard_mask(3)
    for i in range(1, rep.spec.n + 1):
        for s in (PLUS, MINUS):
            b = rep.matrix(b_letter(i, s))
            err = guarded_max_diff(gmat @ b + b @ gmat, np.zeros_like(b), mask3)
            results.append(_tol_result(
                "grading_letter_anticommutes",
                f"{{g, B{'+' if s > 0 else '-'}{i}}}", err, TOL_DIRECT,
                "oracle"))
    return results


def oracle_guard_length(w: Word) -> int:
    """Effective guard length of a word: each ladder letter counts 1, each
    anticommutator symbol 2 (it stands for two ladder letters), and the
    presence of any group-like letter adds 2 because their diagonal matrices
    are only exact below the top occupancy level."""
    ladder = sum(2 if g.kind == "E" else (1 if g.kind == "B" else 0) for g in w)
    grouped = any(g.kind in ("g", "K+", "K-") for g in w)
    return ladder + (2 if grouped else 0)


def oracle_word_agreement(rep: MatrixRep, ctx_key: str, words: Iterable[Word]
                          ) -> List[CheckResult]:
    """represent(w) == represent(normal_form(w)) on the guarded subspace."""
    ctx = CONTEXTS[ctx_key]
    results = []
    for w in words:
        nf = normal_form(Element.of(w), ctx)
        mask = rep.guard_mask(oracle_guard_length(w))
        err = guarded_max_diff(represent(Element.of(w), rep),
                               represent(nf, rep), mask)
        results.append(_tol_result("word_normal_form_agreement",
                                   format_word(w), err, TOL_COMPOSED, ctx_key))
    return results


def tensor_rep_via_coproduct(rep: MatrixRep, ctx_key: str,
                             dim_cap: Optional[int] = None) -> List[CheckResult]:
    """The coproduct composed with rep (x) rep yields a representation on the
    tensor square: every defining relation of the context maps to zero there.
    """
    from .bosonization import ordinary_coproduct, _context_relations

    cap = dimension_cap() if dim_cap is None else dim_cap
    if rep.dim ** 2 > cap:
        raise DimensionOverflow(
            f"tensor-square dimension {rep.dim ** 2} exceeds the cap {cap}")
    max_index = min(rep.spec.n, 2)
    mask = rep.guard_mask(3)
    mask2 = np.kron(mask, mask).astype(bool)
    results = []
    for name, rel in _context_relations(ctx_key, max_index):
        t = ordinary_coproduct(rel, ctx_key)
        total = np.zeros((rep.dim ** 2, rep.dim ** 2), dtype=complex)
        for (w1, w2), c in t.terms.items():
            total += complex(c) * np.kron(represent(Element.of(w1), rep),
                                          represent(Element.of(w2), rep))
        err = guarded_max_diff(total, np.zeros_like(total), mask2)
        results.append(_tol_result("tensor_representation_relation", name,
                                   err, TOL_COMPOSED, ctx_key))
    return results
