"""Machine-readable check reports shared by all verifiers and the CLI.

A report is a JSON array whose first entry is a header (tool name, version,
config echo) followed by one object per check:
{"axiom", "word", "status", "lhs", "rhs", "context"}.  Entries are sorted
and serialized canonically so identical configs produce byte-identical
output.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass
from typing import Iterable, List


@dataclass
class CheckResult:
    axiom: str
    word: str
    status: str  # "pass" or "fail"
    lhs: str = ""
    rhs: str = ""
    context: str = ""

    @property
    def passed(self) -> bool:
        return self.status == "pass"


def all_passed(results: Iterable[CheckResult]) -> bool:
    return all(r.passed for r in results)


def make_report(results: Iterable[CheckResult], config: dict) -> List[dict]:
    from . import __version__

    header = {"tool": "parahopf", "version": __version__, "config": config}
    entries = sorted((asdict(r) for r in results),
                     key=lambda d: (d["context"], d["axiom"], d["word"]))
    return [header] + entries


def report_json(report: List[dict]) -> str:
    return json.dumps(report, sort_keys=True, indent=1)


def summarize(results: Iterable[CheckResult]) -> str:
    results = list(results)
    failed = [r for r in results if not r.passed]
    lines = [f"{len(results) - len(failed)}/{len(results)} checks passed"]
    for r in failed:
        lines.append(f"FAIL [{r.context or '-'}] {r.axiom} on {r.word}: "
                     f"lhs={r.lhs} rhs={r.rhs}")
    return "\n".join(lines)
