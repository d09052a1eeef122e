"""Verification report: one record per check, rendered as JSON or markdown.

Statuses separate two different questions: PASS/FAIL is about internal
consistency of the implementation (a FAIL means the engine contradicts
itself), while FLAG marks an exact, reproducible disagreement between the
computed value and a published claim.  FLAGs are tolerated by default and
fail the run only in strict mode.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Dict, List

PASS = "PASS"
FAIL = "FAIL"
FLAG = "FLAG"

_STATUS_ICON = {PASS: "✓", FAIL: "✗", FLAG: "⚑"}

#: canonical module order for the grouped markdown rendering
MODULE_ORDER = ("scalar_ring", "octonion_core", "fermion_symbolic",
                "field_theory", "cli")


@dataclass(frozen=True)
class CheckResult:
    check_id: str
    module: str
    paper_anchor: str
    computed: str
    claimed: str
    status: str

    def record(self) -> dict:
        # wire schema: module is presentation-only and stays out of it
        return {"check_id": self.check_id, "paper_anchor": self.paper_anchor,
                "computed": self.computed, "claimed": self.claimed,
                "status": self.status}


def render_json(results: List[CheckResult]) -> str:
    rows = [r.record() for r in sorted(results, key=lambda r: r.check_id)]
    return json.dumps(rows, ensure_ascii=False, indent=2) + "\n"


def render_markdown(results: List[CheckResult]) -> str:
    by_module: Dict[str, List[CheckResult]] = {}
    for r in results:
        by_module.setdefault(r.module, []).append(r)
    lines = ["# Verification report", ""]
    n_pass = sum(1 for r in results if r.status == PASS)
    n_flag = sum(1 for r in results if r.status == FLAG)
    n_fail = sum(1 for r in results if r.status == FAIL)
    lines.append("%d checks: %d PASS, %d FLAG, %d FAIL" %
                 (len(results), n_pass, n_flag, n_fail))
    lines.append("")
    for module in MODULE_ORDER:
        if module not in by_module:
            continue
        lines.append("## %s" % module)
        lines.append("")
        lines.append("| check | status | computed | claimed | anchor |")
        lines.append("|---|---|---|---|---|")
        for r in sorted(by_module[module], key=lambda r: r.check_id):
            lines.append("| %s | %s %s | %s | %s | %s |" % (
                r.check_id, _STATUS_ICON[r.status], r.status,
                _md_cell(r.computed), _md_cell(r.claimed), _md_cell(r.paper_anchor)))
        lines.append("")
    return "\n".join(lines)


def _md_cell(s: str) -> str:
    return s.replace("|", "\\|").replace("\n", " ") or "n/a"


def summary_line(results: List[CheckResult]) -> str:
    n_pass = sum(1 for r in results if r.status == PASS)
    n_flag = sum(1 for r in results if r.status == FLAG)
    n_fail = sum(1 for r in results if r.status == FAIL)
    return "%d checks: %d PASS, %d FLAG, %d FAIL" % (len(results), n_pass,
                                                     n_flag, n_fail)
