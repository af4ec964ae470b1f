#!/usr/bin/env python3
"""Run every verification suite at desk scale and write JSON reports.

Produces reports/<name>.json for the super-Hopf suite, both ordinary Hopf
suites, the quasitriangularity suite and two matrix-oracle configurations,
then prints a one-line summary per suite.  Exits nonzero if anything fails.
"""

import pathlib
import sys

from parahopf.cli import main

REPORT_DIR = pathlib.Path(__file__).resolve().parent.parent / "reports"

SUITES = {
    "super_hopf_pb": ["verify", "--ctx", "pb", "--max-len", "4",
                      "--max-index", "2"],
    "ordinary_hopf_pbg": ["verify", "--ctx", "pbg", "--max-len", "4",
                          "--max-index", "2", "--quasitriangular"],
    "ordinary_hopf_pbk": ["verify", "--ctx", "pbk", "--max-len", "4",
                          "--max-index", "2"],
    "oracle_n1_p2": ["oracle", "--n", "1", "--p", "2", "--cutoff", "6",
                     "--seed", "7", "--words", "500"],
    "oracle_n2_p2": ["oracle", "--n", "2", "--p", "2", "--cutoff", "4",
                     "--seed", "3", "--words", "90", "--casimir-mmax", "4"],
    "oracle_n1_p1_boson_limit": ["oracle", "--n", "1", "--p", "1",
                                 "--cutoff", "6", "--seed", "5",
                                 "--words", "120"],
}


def run() -> int:
    REPORT_DIR.mkdir(exist_ok=True)
    worst = 0
    for name, args in SUITES.items():
        target = REPORT_DIR / f"{name}.json"
        code = main(args + ["--output", "json", "--out", str(target)])
        status = "ok" if code == 0 else f"FAILED (exit {code})"
        print(f"{name:28s} -> {target.name}: {status}")
        worst = max(worst, code)
    return worst


if __name__ == "__main__":
    sys.exit(run())
