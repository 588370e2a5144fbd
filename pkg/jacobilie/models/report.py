"""
Check reports.

Every verification command produces a Report: an ordered list of named
check records, each with a verdict and optional detail lines.
"""

from enum import Enum
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field

from jacobilie.symexpr import ZeroTest, ZeroTier


class Verdict(str, Enum):
    """Outcome of a single check."""

    PASS = "pass"
    NUMERIC_PASS = "numeric-pass"
    DISCREPANCY = "discrepancy"
    FAIL = "fail"


def verdict_for(result: ZeroTest) -> Verdict:
    """Map a zero test to a verdict: exact zero passes, numeric zero numeric-passes."""
    if not result.is_zero:
        return Verdict.FAIL
    return Verdict.PASS if result.tier is ZeroTier.EXACT else Verdict.NUMERIC_PASS


def weakest(verdicts: List[Verdict]) -> Verdict:
    """Combine verdicts: fail beats discrepancy beats numeric-pass beats pass."""
    order = [Verdict.FAIL, Verdict.DISCREPANCY, Verdict.NUMERIC_PASS, Verdict.PASS]
    for verdict in order:
        if verdict in verdicts:
            return verdict
    return Verdict.PASS


class CheckRecord(BaseModel):
    """
    One named check.

    Attributes:
        name: Stable identifier of the check
        verdict: Outcome
        detail: Human readable lines (failing components, computed values)
    """

    model_config = ConfigDict(frozen=False)

    name: str = Field(..., min_length=1)
    verdict: Verdict
    detail: List[str] = Field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.verdict is not Verdict.FAIL


class Report(BaseModel):
    """
    Ordered collection of check records produced by one command.

    Attributes:
        command: Echo of the command that produced the report
        records: Check records in evaluation order
        notes: Free text notes (print corrections, substitutions)
        data: Computed values worth keeping (structure constants, solutions)
    """

    model_config = ConfigDict(frozen=False)

    command: str
    records: List[CheckRecord] = Field(default_factory=list)
    notes: List[str] = Field(default_factory=list)
    data: Dict[str, Any] = Field(default_factory=dict)

    def add(self, name: str, verdict: Verdict, *detail: str) -> CheckRecord:
        record = CheckRecord(name=name, verdict=verdict, detail=list(detail))
        self.records.append(record)
        return record

    def add_zero_test(self, name: str, result: ZeroTest, *detail: str) -> CheckRecord:
        return self.add(name, verdict_for(result), *detail)

    def extend(self, other: "Report", prefix: str = "") -> None:
        """Append another report's records, optionally prefixing names."""
        for record in other.records:
            self.records.append(
                CheckRecord(
                    name=f"{prefix}{record.name}",
                    verdict=record.verdict,
                    detail=list(record.detail),
                )
            )
        self.notes.extend(other.notes)

    def get(self, name: str) -> Optional[CheckRecord]:
        return next((r for r in self.records if r.name == name), None)

    @property
    def verdict(self) -> Verdict:
        return weakest([r.verdict for r in self.records])

    @property
    def passed(self) -> bool:
        return all(r.ok for r in self.records)

    @property
    def exit_code(self) -> int:
        return 0 if self.passed else 1

    def summary(self) -> Dict[str, int]:
        counts = {v.value: 0 for v in Verdict}
        for record in self.records:
            counts[record.verdict.value] += 1
        return counts

    def to_dict(self) -> dict:
        data = self.model_dump(mode="json")
        data["verdict"] = self.verdict.value
        data["summary"] = self.summary()
        return data

    @classmethod
    def from_dict(cls, data: dict) -> "Report":
        payload = {k: v for k, v in data.items() if k in cls.model_fields}
        return cls.model_validate(payload)

    def __str__(self) -> str:
        return f"Report(command='{self.command}', records={len(self.records)}, verdict={self.verdict.value})"
