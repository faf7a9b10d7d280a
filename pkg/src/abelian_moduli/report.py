"""Check results and the JSON/text report envelope used by the CLI."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional

from .poly import Poly


def exact(value) -> Any:
    """JSON-safe rendering: Fractions and polynomials become strings, ints stay ints."""
    if isinstance(value, (Fraction, Poly)):
        return str(value)
    if value is None or isinstance(value, (bool, int, str, float)):
        return value
    if isinstance(value, dict):
        return {str(k): exact(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [exact(v) for v in value]
    return str(value)


@dataclass
class Check:
    name: str
    passed: bool
    details: Dict[str, Any] = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {"name": self.name, "passed": self.passed, "details": exact(self.details)}


def identity_check(name: str, lhs: Poly, rhs: Poly, **extra) -> Check:
    residual = lhs - rhs
    details = {"lhs": lhs, "rhs": rhs, "residual": residual}
    details.update(extra)
    return Check(name, residual.is_zero(), details)


@dataclass
class Report:
    command: str
    query: Dict[str, Any] = field(default_factory=dict)
    result: Dict[str, Any] = field(default_factory=dict)
    checks: List[Check] = field(default_factory=list)
    elapsed_s: Optional[float] = None

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def as_dict(self) -> dict:
        return {
            "command": self.command,
            "query": exact(self.query),
            "result": exact(self.result),
            "checks": [c.as_dict() for c in self.checks],
            "passed": self.passed,
            "elapsed_s": self.elapsed_s,
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2, ensure_ascii=False)

    def to_text(self) -> str:
        lines = []
        for key, value in self.result.items():
            lines.append(f"{key}: {_text(value)}")
        for c in self.checks:
            lines.append(f"[{'PASS' if c.passed else 'FAIL'}] {c.name}")
            if not c.passed:
                for key, value in c.details.items():
                    lines.append(f"    {key}: {_text(value)}")
        return "\n".join(lines)


def _text(value) -> str:
    value = exact(value)
    if isinstance(value, (dict, list)):
        return json.dumps(value, ensure_ascii=False)
    return str(value)
