"""Machine-checkable evidence objects.

A certificate carries a kind tag, a pass/fail flag, and enough raw data
(exact rationals serialized as strings) for an independent verifier to
re-derive every rank and inequality without consulting the code that
produced it.
"""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class Certificate:
    kind: str
    passed: bool
    data: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"kind": self.kind, "passed": self.passed, "data": self.data}

    @classmethod
    def from_dict(cls, d: dict) -> "Certificate":
        return cls(kind=d["kind"], passed=bool(d["passed"]), data=d.get("data", {}))

    def __bool__(self) -> bool:
        return self.passed
