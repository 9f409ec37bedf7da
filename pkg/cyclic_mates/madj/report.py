"""
Law-checking results shared by every checker in the kernel.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any, Dict, List, Tuple


class MadjException(Exception):
    pass


def jsonable(value: Any) -> Any:
    """Render witnesses (ids, tuples, categories, functors) into JSON-compatible values."""
    if value is None or isinstance(value, (bool, int, float, str)):
        return value
    if isinstance(value, (tuple, list)):
        return [jsonable(v) for v in value]  # type: ignore
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}  # type: ignore
    name = getattr(value, "name", None)
    if isinstance(name, str):
        return name
    return str(value)


@dataclass(frozen=True)
class Violation:
    """A single failed instance of a law, with the data that exhibits it."""

    law: str
    witness: Tuple[Any, ...] = ()
    detail: str = ""

    def to_json(self) -> Dict[str, Any]:
        result: Dict[str, Any] = {"law": self.law, "witness": jsonable(self.witness)}
        if self.detail:
            result["detail"] = self.detail
        return result

    def __str__(self) -> str:
        return json.dumps(self.to_json())


class Report:
    """
    Accumulates the outcome of a law check.

    checked counts the instances examined per law, violations lists every failed
    instance and skipped records checks that could not be carried out.
    """

    def __init__(self, title: str):
        self.title = title
        self.checked: Dict[str, int] = {}
        self.violations: List[Violation] = []
        self.skipped: List[str] = []

    @property
    def ok(self) -> bool:
        return not self.violations

    def check(self, law: str, holds: bool, *witness: Any, detail: str = "") -> bool:
        self.checked[law] = self.checked.get(law, 0) + 1
        if not holds:
            self.violations.append(Violation(law, tuple(witness), detail))
        return holds

    def fail(self, law: str, *witness: Any, detail: str = "") -> None:
        self.check(law, False, *witness, detail=detail)

    def skip(self, reason: str) -> None:
        self.skipped.append(reason)

    def extend(self, other: Report) -> Report:
        for law, count in other.checked.items():
            self.checked[law] = self.checked.get(law, 0) + count
        self.violations.extend(other.violations)
        self.skipped.extend(other.skipped)
        return self

    def laws(self) -> List[str]:
        return [v.law for v in self.violations]

    def to_json(self) -> Dict[str, Any]:
        return {
            "title": self.title,
            "ok": self.ok,
            "checked": dict(self.checked),
            "violations": [v.to_json() for v in self.violations],
            "skipped": list(self.skipped),
        }

    def __str__(self) -> str:
        return json.dumps(self.to_json())
