"""The answer every decider returns: index 2 with a witness, or index 3 with a reason."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .coloring import EdgeColoring


class Evidence(Enum):
    NO_FAMILY = "NoFamily"
    STAR_MISMATCH = "StarMismatch"
    FINAL_VERIFY_FAIL = "FinalVerifyFail"
    NO_MATCHING = "NoMatching"
    ORACLE = "Oracle"


@dataclass(frozen=True)
class DecisionResult:
    index: int
    witness: EdgeColoring | None = None
    evidence: Evidence | None = None
    trace: tuple = field(default=(), compare=False, repr=False)

    @classmethod
    def two(cls, witness: EdgeColoring, trace=()) -> DecisionResult:
        return cls(2, witness, None, tuple(trace))

    @classmethod
    def three(cls, evidence: Evidence, trace=()) -> DecisionResult:
        return cls(3, None, evidence, tuple(trace))

    @property
    def is_two(self) -> bool:
        return self.index == 2

    def __str__(self) -> str:
        return str(self.index)
