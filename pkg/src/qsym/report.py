"""Structured results for the verification suites and the CLI."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class CheckResult:
    check_id: str
    subject: str
    verdict: str  # 'pass' | 'fail' | 'finding'
    detail: str = ""

    def line(self) -> str:
        mark = {"pass": "PASS", "fail": "FAIL", "finding": "FINDING"}[self.verdict]
        out = f"[{mark:7}] {self.check_id}: {self.subject}"
        if self.detail:
            out += f" -- {self.detail}"
        return out


@dataclass
class VerificationReport:
    suite: str
    results: list[CheckResult] = field(default_factory=list)

    def add(self, check_id, subject, verdict, detail=""):
        if verdict not in ("pass", "fail", "finding"):
            raise ValueError(f"bad verdict {verdict!r}")
        self.results.append(CheckResult(check_id, subject, verdict, detail))

    def extend(self, other: "VerificationReport"):
        self.results.extend(other.results)

    @property
    def passed(self) -> bool:
        """Findings record discrepancies but never fail a run by themselves."""
        return all(r.verdict != "fail" for r in self.results)

    @property
    def counts(self):
        c = {"pass": 0, "fail": 0, "finding": 0}
        for r in self.results:
            c[r.verdict] += 1
        return c

    def exit_code(self) -> int:
        return 0 if self.passed else 1

    def render(self) -> str:
        lines = [f"suite {self.suite}:"]
        lines += ["  " + r.line() for r in self.results]
        c = self.counts
        lines.append(
            f"  => {c['pass']} passed, {c['fail']} failed, {c['finding']} findings"
        )
        return "\n".join(lines)

    def to_json(self):
        return {
            "suite": self.suite,
            "results": [
                {
                    "check": r.check_id,
                    "subject": r.subject,
                    "verdict": r.verdict,
                    "detail": r.detail,
                }
                for r in self.results
            ],
            "passed": self.passed,
        }
