"""Batch command-line front end.

Three subcommands:

* ``nf --ctx <free|boson|pb|pbg|pbk> "<expr>"`` prints the normal form of an
  expression in the terms grammar (exit 2 on a parse error, 3 on a letter
  outside the context alphabet),
* ``verify --ctx <pb|pbg|pbk>`` runs the full axiom suite for the chosen
  context (``--quasitriangular`` adds the R-matrix suite, pbg only) and
  exits 0 only if every check passes (1 otherwise, 2 on a config error),
* ``oracle --n --p --cutoff`` builds the matrix representation, runs the
  relation / number-operator / K / grading checks plus the seeded random
  word agreement, and exits 0 only within tolerance (1 on violation, 4 if
  the dimension cap is exceeded; override the cap with PARAHOPF_DIM_CAP).

Reports are JSON arrays with a leading header object; a fixed config and
seed produce byte-identical output.
"""

from __future__ import annotations

import argparse
import random
import sys
from dataclasses import asdict, dataclass
from typing import List, Optional

from .grammar import ParseError, format_element, parse_element
from .report import CheckResult, all_passed, make_report, report_json, summarize
from .rewriting import CONTEXTS, ForeignLetter, normal_form

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_CONFIG = 2
EXIT_FOREIGN_LETTER = 3
EXIT_DIMENSION = 4


@dataclass
class RunConfig:
    """Echoed into every report header; the seed fully determines samples."""

    context: str = "pb"
    max_len: int = 4
    max_index: int = 2
    n: int = 1
    p: int = 2
    cutoff: int = 6
    seed: int = 0
    output: str = "text"
    quasitriangular: bool = False
    casimir_mmax: int = 4
    words: int = 500
    out: Optional[str] = None


def _emit(results: List[CheckResult], config: RunConfig) -> int:
    cfg = {k: v for k, v in asdict(config).items() if k != "out"}
    if config.output == "json":
        text = report_json(make_report(results, cfg))
    else:
        text = summarize(results)
    if config.out:
        with open(config.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return EXIT_OK if all_passed(results) else EXIT_CHECK_FAILED


def cmd_normal_form(args: argparse.Namespace) -> int:
    if args.ctx not in CONTEXTS:
        print(f"unknown context {args.ctx!r}", file=sys.stderr)
        return EXIT_CONFIG
    try:
        element = parse_element(args.expr)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    try:
        result = normal_form(element, CONTEXTS[args.ctx])
    except ForeignLetter as exc:
        print(f"foreign letter: {exc}", file=sys.stderr)
        return EXIT_FOREIGN_LETTER
    print(format_element(result))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    config = RunConfig(context=args.ctx, max_len=args.max_len,
                       max_index=args.max_index, seed=args.seed,
                       output=args.output, quasitriangular=args.quasitriangular,
                       out=args.out)
    if args.ctx == "pb":
        if args.quasitriangular:
            print("--quasitriangular applies to the pbg context", file=sys.stderr)
            return EXIT_CONFIG
        from .braided_hopf import check_super_hopf_axioms

        results = check_super_hopf_axioms(args.max_len, args.max_index)
    elif args.ctx in ("pbg", "pbk"):
        from .bosonization import (check_ordinary_hopf_axioms,
                                   check_quasitriangularity)

        if args.quasitriangular and args.ctx != "pbg":
            print("--quasitriangular applies to the pbg context", file=sys.stderr)
            return EXIT_CONFIG
        results = check_ordinary_hopf_axioms(args.ctx, args.max_len, args.max_index)
        if args.quasitriangular:
            results += check_quasitriangularity(min(args.max_len, 3), args.max_index)
    else:
        print(f"no axiom suite for context {args.ctx!r}", file=sys.stderr)
        return EXIT_CONFIG
    return _emit(results, config)


def _guarded_sample(sampler, ctx: str, max_len: int, max_index: int,
                    count: int, rng: random.Random, cutoff: int):
    """Draw words until ``count`` of them keep a nonempty truncation guard
    at the given cutoff; deterministic for a fixed seed."""
    from .representations import oracle_guard_length

    out = []
    attempts = 0
    while len(out) < count and attempts < 100 * max(count, 1):
        attempts += 1
        (w,) = sampler(ctx, max_len, max_index, 1, rng)
        if oracle_guard_length(w) <= cutoff:
            out.append(w)
    return out


def cmd_oracle(args: argparse.Namespace) -> int:
    from .representations import (DimensionOverflow, FockSpec,
                                  build_green_ansatz, oracle_word_agreement,
                                  tensor_rep_via_coproduct,
                                  verify_defining_relations,
                                  verify_grading_letter, verify_k_identities,
                                  verify_number_commutators, dimension_cap)
    from .wordgen import oracle_sample_words, sample_words

    config = RunConfig(context="oracle", n=args.n, p=args.p,
                       cutoff=args.cutoff, seed=args.seed, output=args.output,
                       casimir_mmax=args.casimir_mmax, max_len=args.max_len,
                       words=args.words, out=args.out)
    try:
        rep = build_green_ansatz(FockSpec(n=args.n, p=args.p, cutoff=args.cutoff))
    except DimensionOverflow as exc:
        print(f"dimension overflow: {exc}", file=sys.stderr)
        return EXIT_DIMENSION
    except ValueError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG

    results = verify_defining_relations(rep)
    results += verify_number_commutators(rep, m_max=args.casimir_mmax)
    results += verify_k_identities(rep)
    results += verify_grading_letter(rep)

    rng = random.Random(args.seed)
    max_index = min(rep.spec.n, 2)
    per_context = max(1, args.words // 3)
    for ctx in ("pb", "pbk", "pbg"):
        words = _guarded_sample(oracle_sample_words, ctx, args.max_len,
                                max_index, per_context, rng, args.cutoff)
        results += oracle_word_agreement(rep, ctx, words)
        short = _guarded_sample(sample_words, ctx, min(args.max_len, 3),
                                max_index, per_context // 4, rng, args.cutoff)
        results += oracle_word_agreement(rep, ctx, short)

    # the tensor-square check is quadratic in the dimension; a reduced
    # cutoff keeps it cheap while the guard (occupancy <= cutoff - 3)
    # stays nonempty
    tensor_spec = FockSpec(n=args.n, p=args.p, cutoff=min(args.cutoff, 4))
    tensor_rep = build_green_ansatz(tensor_spec)
    if tensor_rep.dim ** 2 <= dimension_cap():
        for ctx in ("pbg", "pbk"):
            results += tensor_rep_via_coproduct(tensor_rep, ctx)
    return _emit(results, config)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="parahopf",
        description="exact paraboson algebra engine: normal forms, Hopf axiom "
                    "suites and the truncated-Fock matrix oracle")
    sub = parser.add_subparsers(dest="command", required=True)

    p_nf = sub.add_parser("nf", help="print the normal form of an expression")
    p_nf.add_argument("--ctx", default="pb",
                      choices=sorted(CONTEXTS), help="algebra context")
    p_nf.add_argument("expr", help="expression in the terms grammar")
    p_nf.set_defaults(func=cmd_normal_form)

    p_verify = sub.add_parser("verify", help="run an axiom suite")
    p_verify.add_argument("--ctx", default="pb", choices=["pb", "pbg", "pbk"])
    p_verify.add_argument("--max-len", type=int, default=4)
    p_verify.add_argument("--max-index", type=int, default=2)
    p_verify.add_argument("--quasitriangular", action="store_true",
                          help="also check the R-matrix identities (pbg)")
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--output", default="text", choices=["text", "json"])
    p_verify.add_argument("--out", default=None, help="write the report here")
    p_verify.set_defaults(func=cmd_verify)

    p_oracle = sub.add_parser("oracle", help="run the matrix oracle")
    p_oracle.add_argument("--n", type=int, default=1, help="number of modes")
    p_oracle.add_argument("--p", type=int, default=2, help="parastatistics order")
    p_oracle.add_argument("--cutoff", type=int, default=6,
                          help="per-mode occupancy levels")
    p_oracle.add_argument("--seed", type=int, default=0)
    p_oracle.add_argument("--words", type=int, default=500,
                          help="random words for the agreement check")
    p_oracle.add_argument("--max-len", type=int, default=5)
    p_oracle.add_argument("--casimir-mmax", type=int, default=4)
    p_oracle.add_argument("--output", default="text", choices=["text", "json"])
    p_oracle.add_argument("--out", default=None)
    p_oracle.set_defaults(func=cmd_oracle)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
