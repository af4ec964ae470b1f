"""Acceptance suite: one test per criterion, each printing a pass/fail line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the lines as the
criteria complete.  Tolerances and bounds are pinned here, not configurable.
"""

import random
import time

import numpy as np

from parahopf.bosonization import (bosonise_cross_validation,
                                   check_ordinary_hopf_axioms,
                                   check_quasitriangularity)
from parahopf.braided_hopf import check_super_hopf_axioms
from parahopf.report import all_passed
from parahopf.representations import (FockSpec, build_green_ansatz,
                                      guarded_max_diff, k_matrices,
                                      number_operator_element,
                                      oracle_word_agreement,
                                      verify_number_commutators)
from parahopf.rewriting import (BOSON, PARABOSON, PARABOSON_K,
                                boson_relations, normal_form,
                                paraboson_relations, replacement_to_bosons)
from parahopf.terms import Element, b_letter, word, K_MINUS, K_PLUS, MINUS, PLUS
from parahopf.wordgen import oracle_sample_words, sample_words


def report(num: int, ok: bool, detail: str) -> None:
    print(f"\nACCEPTANCE {num:2d}: {'PASS' if ok else 'FAIL'} - {detail}")
    assert ok, f"criterion {num}: {detail}"


def test_criterion_01_ideal_reduction():
    t0 = time.time()
    pb_count = 0
    for rel in paraboson_relations(3):
        assert normal_form(rel, PARABOSON).is_zero()
        pb_count += 1
    boson_count = 0
    for rel in boson_relations(3):
        assert normal_form(rel, BOSON).is_zero()
        boson_count += 1
    elapsed = time.time() - t0
    ok = pb_count == 8 * 27 and boson_count == 27 and elapsed < 10.0
    report(1, ok, f"{pb_count} trilinear + {boson_count} boson ideal "
                  f"generators reduce to 0 in {elapsed:.2f}s (< 10 s)")


def test_criterion_02_replacement_map():
    for rel in paraboson_relations(3):
        assert replacement_to_bosons(rel).is_zero()
    rep = build_green_ansatz(FockSpec(n=1, p=1, cutoff=6))
    mask = rep.guard_mask(2)
    worst = 0.0
    for rel in boson_relations(1):
        err = guarded_max_diff(represent_rel(rel, rep),
                               np.zeros((rep.dim, rep.dim), complex), mask)
        worst = max(worst, err)
    ok = worst <= 1e-10
    report(2, ok, f"replacement map kills all 216 trilinear generators; "
                  f"p=1 rep satisfies the CCR to {worst:.2e} (<= 1e-10)")


def represent_rel(rel, rep):
    from parahopf.representations import represent

    return represent(rel, rep)


def test_criterion_03_super_hopf_suite():
    t0 = time.time()
    results = check_super_hopf_axioms(max_len=4, max_index=2)
    elapsed = time.time() - t0
    ok = all_passed(results) and elapsed < 120.0
    report(3, ok, f"{len(results)} super-Hopf checks (words of length <= 4 "
                  f"over both modes) pass exactly in {elapsed:.1f}s (< 2 min)")


def test_criterion_04_bosonisation_cross_validation():
    results = bosonise_cross_validation(max_len=3, max_index=2)
    ok = all_passed(results)
    report(4, ok, f"general smash-product formulas agree with the direct "
                  f"extension on {len(results)} checks (words of length <= 3)")


def test_criterion_05_ordinary_hopf_suites():
    res_g = check_ordinary_hopf_axioms("pbg", max_len=4, max_index=2)
    res_k = check_ordinary_hopf_axioms("pbk", max_len=4, max_index=2)
    ok = all_passed(res_g) and all_passed(res_k)
    report(5, ok, f"ordinary Hopf axioms pass exactly: {len(res_g)} checks "
                  f"for the g-extension, {len(res_k)} for the K-extension")


def test_criterion_06_quasitriangularity():
    results = check_quasitriangularity(max_len=3, max_index=2)
    conj = [r for r in results if r.axiom == "r_conjugates_coproduct"]
    hexes = [r for r in results if r.axiom.startswith("hexagon")]
    ok = all_passed(results) and len(hexes) == 2 and len(conj) >= 155
    report(6, ok, f"R-matrix conjugation on {len(conj)} words plus both "
                  f"hexagon identities hold exactly")


def test_criterion_07_number_operator_commutators():
    symbolic_ok = True
    for n in (1, 2):
        nel = number_operator_element(n)
        for m in (1, 2, 3):
            nm = Element.one()
            np1m = Element.one()
            for _ in range(m):
                nm = nm * nel
                np1m = np1m * (nel + 1)
            for i in range(1, n + 1):
                bp = Element.of(b_letter(i, PLUS))
                diff = (nm * bp - bp * nm) - bp * (np1m - nm)
                symbolic_ok &= normal_form(diff, PARABOSON).is_zero()
    matrix_ok = True
    for spec in (FockSpec(1, 2, 6), FockSpec(2, 2, 4)):
        rep = build_green_ansatz(spec)
        matrix_ok &= all_passed(verify_number_commutators(rep, m_max=4,
                                                          symbolic_m_max=0))
    ok = symbolic_ok and matrix_ok
    report(7, ok, "number-power commutator identity: exact zero normal form "
                  "for m <= 3, n <= 2; matrix check m <= 4 on (1,2,6) and "
                  "(2,2,4) to 1e-9")


def test_criterion_08_k_identities():
    worst = 0.0
    for spec in (FockSpec(1, 2, 6), FockSpec(2, 2, 4)):
        rep = build_green_ansatz(spec)
        kp, km = k_matrices(rep)
        worst = max(worst, float(np.abs(kp @ km - rep.identity()).max()))
        mask = rep.guard_mask(3)
        for i in range(1, rep.spec.n + 1):
            for s in (PLUS, MINUS):
                b = rep.matrix(b_letter(i, s))
                for kmat in (kp, km):
                    worst = max(worst, guarded_max_diff(
                        kmat @ b + b @ kmat, np.zeros_like(b), mask))
    symbolic_ok = normal_form(
        Element.of(word(K_PLUS, K_MINUS)) - 1, PARABOSON_K).is_zero()
    for i in (1, 2):
        for s in (PLUS, MINUS):
            for k in (K_PLUS, K_MINUS):
                b = b_letter(i, s)
                anti = Element.of(word(k, b)) + Element.of(word(b, k))
                symbolic_ok &= normal_form(anti, PARABOSON_K).is_zero()
    ok = worst <= 1e-10 and symbolic_ok
    report(8, ok, f"K anticommutation and invertibility: matrix error "
                  f"{worst:.2e} (<= 1e-10), symbolic normal forms exactly 0")


def test_criterion_09_oracle_agreement():
    t0 = time.time()
    rep = build_green_ansatz(FockSpec(n=1, p=2, cutoff=6))
    rng = random.Random(2718)
    total = 0
    ok = True
    for ctx in ("pb", "pbk", "pbg"):
        words = oracle_sample_words(ctx, 5, 1, 180, rng)
        results = oracle_word_agreement(rep, ctx, words)
        ok &= all_passed(results)
        total += len(results)
    elapsed = time.time() - t0
    ok = ok and total >= 500 and elapsed < 300.0
    report(9, ok, f"{total} seeded random words agree with their normal "
                  f"forms to 1e-9 in {elapsed:.1f}s (< 5 min)")


def test_criterion_10_confluence_evidence():
    rng = random.Random(42)
    words = sample_words("pb", 6, 2, 1000, rng)
    ok = True
    for w in words:
        r1 = normal_form(Element.of(w), PARABOSON, rng=random.Random(rng.random()))
        r2 = normal_form(Element.of(w), PARABOSON, rng=random.Random(rng.random()))
        ok &= (r1 == r2)
    report(10, ok, "1000 seeded random words reduce identically under two "
                   "randomized rule-application orders")
