"""Pass/fail reports shared by every verification routine."""
from __future__ import annotations

from dataclasses import asdict, dataclass, field


@dataclass
class Check:
    name: str
    passed: bool
    witness: str | None = None
    claim: str = ""
    # informational checks are reported but never fail the report
    required: bool = True


@dataclass
class Report:
    title: str
    checks: list[Check] = field(default_factory=list)

    def add(self, name, passed, witness=None, claim="", required=True) -> Check:
        chk = Check(name, bool(passed), None if passed else witness, claim, required)
        self.checks.append(chk)
        return chk

    def extend(self, other: "Report", prefix: str = "") -> None:
        for c in other.checks:
            self.checks.append(Check(prefix + c.name, c.passed, c.witness, c.claim, c.required))

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks if c.required)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if c.required and not c.passed]

    def get(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_json(self) -> dict:
        return {
            "title": self.title,
            "passed": self.passed,
            "checks": [asdict(c) for c in self.checks],
        }

    def lines(self) -> list[str]:
        out = [f"{self.title}: {'PASS' if self.passed else 'FAIL'}"]
        for c in self.checks:
            mark = "ok" if c.passed else ("FAIL" if c.required else "note")
            tail = f"  [{c.witness}]" if c.witness else ""
            out.append(f"  {mark:4s} {c.name}{tail}")
        return out

    def __str__(self) -> str:
        return "\n".join(self.lines())
