"""Verification reports: one record per executed check.

A report line carries the check id, the outcome (pass, fail or skipped),
the wall-clock cost in milliseconds, the anchor of the reference data the
check ran against, and, for failures, a serialized residual certifying
the mismatch.  Everything except the timing field is deterministic.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass

PASS = "pass"
FAIL = "fail"
SKIPPED = "skipped"


@dataclass(frozen=True)
class VerificationReport:
    check_id: str
    status: str
    elapsed_ms: int
    anchor: str
    residual: str | None = None
    note: str = ""

    def __post_init__(self) -> None:
        if self.status not in (PASS, FAIL, SKIPPED):
            raise ValueError(f"bad status {self.status!r}")
        if self.status == FAIL and self.residual is None:
            raise ValueError("a failing report must carry a residual")

    def line(self) -> str:
        """One aligned human-readable row."""
        text = f"{self.status.upper():7s} {self.check_id:32s} {self.elapsed_ms:6d} ms"
        if self.note:
            text += f"  [{self.note}]"
        return text


def sort_reports(reports: list[VerificationReport]) -> list[VerificationReport]:
    return sorted(reports, key=lambda r: r.check_id)


def reports_to_json(reports: list[VerificationReport]) -> str:
    rows = [asdict(r) for r in sort_reports(reports)]
    return json.dumps(rows, indent=2) + "\n"


def exit_code(reports: list[VerificationReport]) -> int:
    """0 only when every check passed; failures and skips exit 1."""
    return 0 if all(r.status == PASS for r in reports) else 1
