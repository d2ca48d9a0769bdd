from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .ordinal import OrdinalMap


class CutoffExceeded(RuntimeError):
    """An enumeration ran past its resource budget; the check is inconclusive."""


@dataclass
class CheckResult:
    """Outcome of a finite verification; falsy when a counterexample was found."""

    ok: bool
    witness: dict[str, Any] | None = None
    stats: dict[str, Any] = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.ok

    @classmethod
    def fail(cls, **witness: Any) -> "CheckResult":
        return cls(False, {k: to_jsonable(v) for k, v in witness.items()})


def to_jsonable(value: Any) -> Any:
    """Render witnesses with ordinal maps in their flat integer form."""
    if isinstance(value, OrdinalMap):
        return value.flat()
    if isinstance(value, (str, int, bool)) or value is None:
        return value
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    return repr(value)
