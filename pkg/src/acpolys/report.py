"""Pass/fail reporting shared by the verification suites.

A Check records one comparison: an identifier, a human-readable
description, a status ("pass", "fail", or "error"), the two compared
values rendered as strings (exact strings for algebraic checks, repr'd
floats for quadrature checks), and an error metric ("0" for exact
agreement, a relative or absolute error for numeric checks).
"""

from __future__ import annotations

from dataclasses import dataclass, field


PASS = "pass"
FAIL = "fail"
ERROR = "error"


@dataclass
class Check:
    id: str
    description: str
    status: str
    lhs: str = ""
    rhs: str = ""
    error_metric: str = ""

    def to_json_dict(self) -> dict:
        return {
            "id": self.id,
            "description": self.description,
            "status": self.status,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "error_metric": self.error_metric,
        }


def exact_check(check_id: str, description: str, lhs, rhs) -> Check:
    """A check comparing two exactly-comparable values (== must be exact)."""
    if lhs == rhs:
        return Check(check_id, description, PASS, str(lhs), str(rhs), "0")
    return Check(check_id, description, FAIL, str(lhs), str(rhs), "exact mismatch")


@dataclass
class VerificationReport:
    suite: str
    checks: list = field(default_factory=list)

    def extend(self, checks) -> "VerificationReport":
        self.checks.extend(checks)
        return self

    @property
    def counts(self) -> dict:
        summary = {"total": len(self.checks), "passed": 0, "failed": 0, "errors": 0}
        for c in self.checks:
            if c.status == PASS:
                summary["passed"] += 1
            elif c.status == FAIL:
                summary["failed"] += 1
            else:
                summary["errors"] += 1
        return summary

    @property
    def all_passed(self) -> bool:
        return all(c.status == PASS for c in self.checks)

    def exit_code(self) -> int:
        """0 if every check passed, 3 if any errored, else 1."""
        counts = self.counts
        if counts["errors"]:
            return 3
        if counts["failed"]:
            return 1
        return 0

    def to_json_dict(self) -> dict:
        return {
            "suite": self.suite,
            "checks": [c.to_json_dict() for c in self.checks],
            "summary": self.counts,
        }
