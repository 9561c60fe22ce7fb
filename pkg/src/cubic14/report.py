"""Named checks and the verification report."""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field


@dataclass
class Check:
    name: str
    anchor: str
    expected: object
    computed: object
    passed: bool
    ms: int = 0

    def to_dict(self) -> dict:
        return {"name": self.name, "anchor": self.anchor, "expected": _plain(self.expected),
                "computed": _plain(self.computed), "pass": bool(self.passed), "ms": self.ms}


def _plain(v):
    if isinstance(v, tuple):
        return [_plain(x) for x in v]
    if isinstance(v, list):
        return [_plain(x) for x in v]
    if isinstance(v, dict):
        return {k: _plain(x) for k, x in v.items()}
    if isinstance(v, (bool, int, float, str)) or v is None:
        return v
    return str(v)


def run_check(name: str, anchor: str, expected, compute) -> Check:
    """Evaluate ``compute()`` and compare with ``expected``; errors count as failures."""
    t0 = time.perf_counter()
    try:
        computed = compute()
        ok = computed == expected
    except Exception as exc:  # a failed check must not stop the others
        computed = f"error: {type(exc).__name__}: {exc}"
        ok = False
    ms = int((time.perf_counter() - t0) * 1000)
    return Check(name, anchor, expected, computed, ok, ms)


@dataclass
class VerificationReport:
    prime: int
    seed: int
    checks: list = field(default_factory=list)
    assumptions: list = field(default_factory=list)
    aborted: str | None = None
    surface_type: str | None = None

    @property
    def verdict(self) -> bool:
        return self.aborted is None and bool(self.checks) and all(c.passed for c in self.checks)

    def add(self, check: Check) -> Check:
        self.checks.append(check)
        return check

    def extend(self, checks):
        for c in checks:
            self.add(c)

    def assume(self, name: str, anchor: str, value):
        self.assumptions.append({"name": name, "anchor": anchor, "value": _plain(value),
                                 "status": "assumed, not recomputed"})

    def failed(self) -> list:
        return [c.name for c in self.checks if not c.passed]

    def to_dict(self) -> dict:
        out = {"verdict": "pass" if self.verdict else "fail", "prime": self.prime, "seed": self.seed,
               "checks": [c.to_dict() for c in self.checks]}
        if self.surface_type:
            out["surface_type"] = self.surface_type
        if self.assumptions:
            out["assumptions"] = self.assumptions
        if self.aborted:
            out["aborted"] = self.aborted
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)
