from __future__ import annotations

from typing import Any

from pydantic import BaseModel, ConfigDict, computed_field


class CaseResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    name: str
    passed: bool
    data: dict[str, Any] = {}


class SuiteReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    suite: str
    N: int
    seed: int
    cases: tuple[CaseResult, ...]

    @computed_field
    @property
    def passed(self) -> bool:
        return all(case.passed for case in self.cases)

    @computed_field
    @property
    def pass_rate(self) -> float:
        if not self.cases:
            return 1.0
        return sum(case.passed for case in self.cases) / len(self.cases)
