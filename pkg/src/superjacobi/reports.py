"""Report records shared by the checkers and the CLI."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple

from superjacobi.core import coeff_to_json, format_coeff

SCHEMA_VERSION = 1


@dataclass
class VerificationResult:
    """Outcome of checking one identity.

    ``residual`` lists the nonzero terms of the failing evaluation as
    ``(label, coeff)`` pairs in canonical order; ``witness`` is the first
    violating index tuple when the check ranges over basis tuples.
    """

    name: str
    holds: bool
    parities: Optional[Tuple[int, ...]] = None
    residual: List[Tuple[str, Fraction]] = field(default_factory=list)
    witness: Optional[Tuple[int, ...]] = None
    checked: int = 1

    @property
    def status(self) -> str:
        return "zero" if self.holds else "nonzero"

    def to_record(self) -> Dict[str, Any]:
        rec: Dict[str, Any] = {
            "identity": self.name,
            "parities": list(self.parities) if self.parities is not None else None,
            "status": self.status,
            "checked": self.checked,
        }
        if not self.holds:
            rec["residual"] = [[label, coeff_to_json(c)] for label, c in self.residual]
            if self.witness is not None:
                rec["witness"] = list(self.witness)
        return rec

    def describe(self) -> str:
        par = "" if self.parities is None else f" parities={''.join(map(str, self.parities))}"
        if self.holds:
            return f"{self.name}{par}: ZERO ({self.checked} checked)"
        wit = "" if self.witness is None else f" at {tuple(self.witness)}"
        return f"{self.name}{par}: NONZERO{wit}: {render_residual(self.residual)}"


def render_residual(terms: Sequence[Tuple[str, Fraction]]) -> str:
    if not terms:
        return "0"
    out = ""
    for k, (label, c) in enumerate(terms):
        mag = abs(c)
        if label == "1" and mag != 1:
            body = format_coeff(mag)
        else:
            body = label if mag == 1 else f"{format_coeff(mag)}*{label}"
        if k == 0:
            out = f"-{body}" if c < 0 else body
        else:
            out += f" - {body}" if c < 0 else f" + {body}"
    return out


@dataclass
class Step:
    name: str
    passed: bool
    detail: str = ""

    def to_record(self) -> Dict[str, Any]:
        return {"step": self.name, "passed": self.passed, "detail": self.detail}


@dataclass
class DerivationReport:
    """A sequence of mechanically checked steps."""

    name: str
    steps: List[Step] = field(default_factory=list)

    def add(self, name: str, passed: bool, detail: str = "") -> Step:
        step = Step(name, bool(passed), detail)
        self.steps.append(step)
        return step

    @property
    def ok(self) -> bool:
        return all(s.passed for s in self.steps)

    def to_record(self) -> Dict[str, Any]:
        return {"report": self.name, "ok": self.ok, "steps": [s.to_record() for s in self.steps]}

    def lines(self) -> List[str]:
        out = [f"{self.name}: {'PASS' if self.ok else 'FAIL'}"]
        for s in self.steps:
            tail = f"  ({s.detail})" if s.detail else ""
            out.append(f"  [{'pass' if s.passed else 'FAIL'}] {s.name}{tail}")
        return out
