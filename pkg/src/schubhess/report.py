"""Result records for the verification sweeps."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any


@dataclass
class VerificationReport:
    check: str
    parameters: dict[str, Any]
    cases: int = 0
    failures: list[dict[str, str]] = field(default_factory=list)
    elapsed_ms: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures

    @property
    def n(self) -> int | None:
        return self.parameters.get("n")

    def record(self, passed: bool, **case: Any) -> None:
        """Count one case; keep its descriptor (as text) only if it failed."""
        self.cases += 1
        if not passed:
            self.failures.append({k: str(v) for k, v in case.items()})

    def to_dict(self) -> dict[str, Any]:
        return {
            "check": self.check,
            "n": self.n,
            "parameters": self.parameters,
            "cases": self.cases,
            "failures": self.failures,
            "elapsed_ms": round(self.elapsed_ms, 3),
        }

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)

    def summary(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        params = " ".join(f"{k}={v}" for k, v in self.parameters.items())
        return (f"{status} {self.check} {params}: {self.cases} cases, "
                f"{len(self.failures)} failures")
