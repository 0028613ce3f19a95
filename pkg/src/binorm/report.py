"""Machine-readable outcome of an inequality check or sweep."""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Sequence

from .core import Family, rational_str

__all__ = [
    "COUNTEREXAMPLE",
    "EQUALITY",
    "VERIFIED",
    "PreconditionError",
    "VerificationReport",
    "Stopwatch",
    "classify_outcome",
]

VERIFIED = "verified"
COUNTEREXAMPLE = "counterexample"
EQUALITY = "equality-witness-found"


class PreconditionError(ValueError):
    """The inputs do not satisfy the hypothesis of the inequality being checked."""


def classify_outcome(lhs: Fraction, bound: Fraction, sense: str) -> str:
    """Status for ``lhs <sense> bound``; equality gets its own status."""
    if sense == "<=":
        ok = lhs <= bound
    elif sense == ">=":
        ok = lhs >= bound
    else:
        raise ValueError(f"unknown sense {sense!r}")
    if not ok:
        return COUNTEREXAMPLE
    return EQUALITY if lhs == bound else VERIFIED


def _encode_families(fams: Sequence[Family] | None):
    if fams is None:
        return None
    return [f.as_sets() for f in fams]


def _jsonable(v: Any) -> Any:
    if isinstance(v, Fraction):
        return rational_str(v)
    if isinstance(v, Family):
        return {"n": v.n, "sets": v.as_sets()}
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    return v


@dataclass
class VerificationReport:
    """Result of checking one inequality on one input or over a whole sweep.

    ``extremal_value`` is the tightest left-hand side seen and ``bound`` the
    right-hand side it was compared against with ``sense`` (``"<="`` or
    ``">="``).  A ``counterexample`` status always carries the offending
    families so the failure can be re-checked from the report alone.
    """

    theorem_id: str
    params: dict
    status: str
    cases_checked: int
    extremal_value: Fraction | None = None
    bound: Fraction | None = None
    sense: str = "<="
    witness: list[Family] | None = None
    counterexample: list[Family] | None = None
    runtime_ms: int = 0
    details: dict = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.status == COUNTEREXAMPLE and not self.counterexample:
            raise ValueError("a counterexample report must carry the counterexample")

    @property
    def ok(self) -> bool:
        return self.status != COUNTEREXAMPLE

    def to_dict(self, timing: bool = True) -> dict:
        return {
            "theorem_id": self.theorem_id,
            "params": _jsonable(self.params),
            "status": self.status,
            "cases_checked": self.cases_checked,
            "extremal_value": None if self.extremal_value is None else rational_str(self.extremal_value),
            "bound": None if self.bound is None else rational_str(self.bound),
            "sense": self.sense,
            "witness": _encode_families(self.witness),
            "counterexample": _encode_families(self.counterexample),
            "runtime_ms": self.runtime_ms if timing else 0,
            "details": _jsonable(self.details),
        }

    def to_json(self, timing: bool = True, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(timing), indent=indent, sort_keys=False)

    @classmethod
    def from_dict(cls, data: dict) -> "VerificationReport":
        from .familyio import family_from_sets

        n = data.get("params", {}).get("n")

        def dec(fams):
            if fams is None:
                return None
            if n is None:
                raise ValueError("report params must include n to decode families")
            return [family_from_sets(n, sets) for sets in fams]

        def frac(s):
            return None if s is None else Fraction(s)

        return cls(
            theorem_id=data["theorem_id"],
            params=dict(data.get("params", {})),
            status=data["status"],
            cases_checked=int(data["cases_checked"]),
            extremal_value=frac(data.get("extremal_value")),
            bound=frac(data.get("bound")),
            sense=data.get("sense", "<="),
            witness=dec(data.get("witness")),
            counterexample=dec(data.get("counterexample")),
            runtime_ms=int(data.get("runtime_ms", 0)),
            details=dict(data.get("details", {})),
        )


class Stopwatch:
    def __init__(self) -> None:
        self._t0 = time.perf_counter()

    def ms(self) -> int:
        return int((time.perf_counter() - self._t0) * 1000)
