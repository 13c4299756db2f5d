"""Check reports: one verdict per diagram instance, with witnesses."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .arith.linmap import Witness


@dataclass
class Verdict:
    diagram: str
    passed: bool
    where: str = ""
    witness: Witness | None = None
    note: str = ""

    def render(self) -> str:
        mark = "PASS" if self.passed else "FAIL"
        head = f"[{mark}] {self.diagram}"
        if self.where:
            head += f" @ {self.where}"
        if self.note:
            head += f" ({self.note})"
        if self.witness is not None:
            head += f"\n       witness {self.witness.describe()}"
        return head

    def to_dict(self) -> dict:
        out = {"diagram": self.diagram, "passed": self.passed, "where": self.where}
        if self.note:
            out["note"] = self.note
        if self.witness is not None:
            w = self.witness
            out["witness"] = {
                "index": list(w.index),
                "label": w.label,
                "left": [[list(k), str(v)] for k, v in sorted(w.left.items())],
                "right": [[list(k), str(v)] for k, v in sorted(w.right.items())],
            }
        return out

    @classmethod
    def from_dict(cls, data: dict) -> Verdict:
        w = data.get("witness")
        witness = None
        if w is not None:
            witness = Witness(tuple(w["index"]),
                              {tuple(k): v for k, v in w["left"]},
                              {tuple(k): v for k, v in w["right"]},
                              w.get("label", ""))
        return cls(data["diagram"], bool(data["passed"]), data.get("where", ""), witness,
                   data.get("note", ""))


@dataclass
class CheckReport:
    suite: str
    verdicts: list[Verdict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(v.passed for v in self.verdicts)

    def __bool__(self):
        return self.passed

    def add(self, diagram: str, passed: bool, witness: Witness | None = None,
            where: str = "", note: str = "") -> Verdict:
        v = Verdict(diagram, bool(passed), where, witness, note)
        self.verdicts.append(v)
        return v

    def extend(self, other: CheckReport) -> CheckReport:
        self.verdicts.extend(other.verdicts)
        return self

    def diagrams(self) -> list[str]:
        seen = []
        for v in self.verdicts:
            if v.diagram not in seen:
                seen.append(v.diagram)
        return seen

    def for_diagram(self, diagram: str) -> list[Verdict]:
        return [v for v in self.verdicts if v.diagram == diagram]

    def diagram_passed(self, diagram: str) -> bool:
        found = self.for_diagram(diagram)
        if not found:
            raise KeyError(f"no verdict for {diagram!r} in suite {self.suite!r}")
        return all(v.passed for v in found)

    def failures(self) -> list[Verdict]:
        return [v for v in self.verdicts if not v.passed]

    def first_failure(self, diagram: str | None = None) -> Verdict | None:
        for v in self.verdicts:
            if not v.passed and (diagram is None or v.diagram == diagram):
                return v
        return None

    def summary(self) -> list[tuple[str, bool, int]]:
        """Per diagram id: overall verdict and number of instances checked."""
        return [(d, self.diagram_passed(d), len(self.for_diagram(d))) for d in self.diagrams()]

    def render(self, verbose: bool = False) -> str:
        lines = [f"suite {self.suite}: {'PASS' if self.passed else 'FAIL'}"]
        for d, ok, count in self.summary():
            lines.append(f"  [{'PASS' if ok else 'FAIL'}] {d} ({count} checked)")
            shown = self.for_diagram(d) if verbose else [self.first_failure(d)] if not ok else []
            for v in shown:
                lines.append("    " + v.render().replace("\n", "\n    "))
        return "\n".join(lines)

    def to_dict(self) -> dict:
        return {"suite": self.suite, "passed": self.passed,
                "verdicts": [v.to_dict() for v in self.verdicts]}

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), ensure_ascii=False, **kw)

    @classmethod
    def from_dict(cls, data: dict) -> CheckReport:
        report = cls(data["suite"], [Verdict.from_dict(v) for v in data["verdicts"]])
        if report.passed != bool(data["passed"]):
            raise ValueError("overall flag disagrees with the verdicts")
        return report

    @classmethod
    def from_json(cls, text: str) -> CheckReport:
        return cls.from_dict(json.loads(text))


def merge(suite: str, *reports: CheckReport) -> CheckReport:
    out = CheckReport(suite)
    for r in reports:
        out.extend(r)
    return out
