"""Pass/fail reports shared by every verification routine."""

from __future__ import annotations

import json
from dataclasses import dataclass, field


@dataclass
class Case:
    id: str
    passed: bool
    detail: str = ""


@dataclass
class Report:
    name: str
    n: int
    cases: list[Case] = field(default_factory=list)
    # JSON key naming the report; lemma reports use "lemma"
    key: str = "check"
    notes: list[str] = field(default_factory=list)

    def add(self, case_id: str, passed: bool, detail="") -> None:
        self.cases.append(Case(case_id, bool(passed), str(detail)))

    def extend(self, other: Report) -> None:
        self.cases.extend(other.cases)
        self.notes.extend(other.notes)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.cases)

    def sorted_cases(self) -> list[Case]:
        return sorted(self.cases, key=lambda c: c.id)

    def to_dict(self) -> dict:
        out = {
            self.key: self.name,
            "n": self.n,
            "pass": self.passed,
            "cases": [{"id": c.id, "pass": c.passed, "detail": c.detail}
                      for c in self.sorted_cases()],
        }
        if self.notes:
            out["notes"] = list(self.notes)
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=False)

    def to_tsv(self) -> str:
        lines = ["report\tn\tid\tpass\tdetail"]
        for c in self.sorted_cases():
            lines.append(f"{self.name}\t{self.n}\t{c.id}\t{'PASS' if c.passed else 'FAIL'}\t{c.detail}")
        return "\n".join(lines)

    def to_text(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        lines = [f"== {self.name} (n={self.n}): {status}, {len(self.cases)} checks"]
        for c in self.sorted_cases():
            lines.append(f"  [{'PASS' if c.passed else 'FAIL'}] {c.id}: {c.detail}")
        lines.extend(f"  note: {note}" for note in self.notes)
        return "\n".join(lines)
