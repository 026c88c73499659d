"""Small result records shared by the checking functions."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass
class Verdict:
    """A boolean answer with an optional witness explaining a negative one."""

    ok: bool
    witness: Any = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


@dataclass
class Report:
    """Outcome of a batch check: counts plus every failure found."""

    title: str
    checked: int = 0
    failures: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def __bool__(self) -> bool:
        return self.ok

    def fail(self, item) -> None:
        self.failures.append(item)

    def summary(self) -> str:
        status = "ok" if self.ok else f"{len(self.failures)} failure(s)"
        return f"{self.title}: {self.checked} checked, {status}"
