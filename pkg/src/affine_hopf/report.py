from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of an exact verification.

    ``relation`` names the first violated relation and ``witness`` carries
    the data that exhibits it; both are ``None`` on success.
    """

    passed: bool
    checked: int = 0
    relation: str | None = None
    witness: Any = None
    details: dict = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.passed

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "checked": self.checked,
            "relation": self.relation,
            "witness": self.witness,
            **self.details,
        }
