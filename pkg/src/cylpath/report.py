"""Pass/fail records for exact equation checks."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field


@dataclass(frozen=True)
class Check:
    anchor: str
    instance: str
    passed: bool
    witness: str | None = None

    def machine_line(self) -> str:
        cols = [self.anchor, self.instance, "PASS" if self.passed else "FAIL"]
        if not self.passed:
            cols.append(self.witness or "")
        return "\t".join(_clean(c) for c in cols)


def _clean(text: str) -> str:
    return text.replace("\t", " ").replace("\n", " ")


@dataclass
class VerificationReport:
    suite: str
    checks: list[Check] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)

    def record(self, anchor: str, instance: str, passed: bool, witness: str | None = None) -> bool:
        if not passed and not witness:
            raise ValueError(f"failing check {anchor} / {instance} needs a witness")
        self.checks.append(Check(anchor, instance, bool(passed), None if passed else witness))
        return bool(passed)

    def extend(self, other: "VerificationReport") -> "VerificationReport":
        self.checks.extend(other.checks)
        self.warnings.extend(other.warnings)
        return self

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def counts(self) -> dict[str, tuple[int, int]]:
        """anchor -> (passed, failed), in first-seen order."""
        ok, bad = Counter(), Counter()
        order: dict[str, None] = {}
        for c in self.checks:
            order.setdefault(c.anchor)
            (ok if c.passed else bad)[c.anchor] += 1
        return {a: (ok[a], bad[a]) for a in order}

    def to_machine(self) -> str:
        return "".join(c.machine_line() + "\n" for c in self.checks)

    def to_text(self) -> str:
        lines = [f"suite: {self.suite}"]
        for w in self.warnings:
            lines.append(f"warning: {w}")
        for anchor, (ok, bad) in self.counts().items():
            lines.append(f"  {anchor}: {ok} passed, {bad} failed")
        for c in self.failures:
            lines.append(f"  FAIL {c.anchor} [{c.instance}]: {c.witness}")
        total_bad = len(self.failures)
        lines.append(
            f"{'PASS' if total_bad == 0 else 'FAIL'}: {len(self.checks) - total_bad}/{len(self.checks)} checks passed"
        )
        return "\n".join(lines) + "\n"

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "passed": self.passed,
            "warnings": list(self.warnings),
            "checks": [
                {"anchor": c.anchor, "instance": c.instance, "passed": c.passed, "witness": c.witness}
                for c in self.checks
            ],
        }
