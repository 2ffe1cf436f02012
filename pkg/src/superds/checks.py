"""Structured pass/fail reports shared by the verification operations."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class Check:
    name: str
    passed: bool
    witness: str | None = None


@dataclass
class Report:
    case: str
    checks: list[Check] = field(default_factory=list)
    graded_dims: dict[str, list[int]] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name: str, passed: bool, witness: str | None = None) -> None:
        self.checks.append(Check(name, bool(passed), witness))

    def record_dims(self, name: str, graded: tuple[int, int]) -> None:
        self.graded_dims[name] = list(graded)

    def failures(self) -> list[str]:
        return [c.name for c in self.checks if not c.passed]

    def summary(self) -> str:
        verdict = "pass" if self.passed else "FAIL ({})".format(", ".join(self.failures()))
        return f"{self.case}: {verdict}"
