"""Per-axiom check results with first-failure witnesses."""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import ShapeError
from .monoidal import ExactMorphism

__all__ = ["Witness", "AxiomResult", "CheckReport"]


@dataclass(frozen=True)
class Witness:
    """First differing matrix entry (row-major) between the two sides of an axiom."""

    row: int
    col: int
    lhs: str
    rhs: str

    def to_dict(self) -> dict:
        return {"row": self.row, "col": self.col, "lhs": self.lhs, "rhs": self.rhs}


@dataclass(frozen=True)
class AxiomResult:
    name: str
    passed: bool
    witness: Witness | None = None
    note: str | None = None

    def __post_init__(self):
        if self.passed and self.witness is not None:
            raise ValueError("a passing axiom carries no witness")

    def to_dict(self) -> dict:
        out = {"name": self.name, "pass": self.passed}
        if self.witness is not None:
            out["witness"] = self.witness.to_dict()
        if self.note:
            out["note"] = self.note
        return out


@dataclass
class CheckReport:
    subject: str
    entries: list[AxiomResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(e.passed for e in self.entries)

    def __bool__(self) -> bool:
        return self.passed

    def add_equality(self, name: str, lhs: ExactMorphism, rhs: ExactMorphism) -> AxiomResult:
        """Record whether two morphisms agree; on failure store the first differing entry."""
        if lhs.source.dim != rhs.source.dim or lhs.target.dim != rhs.target.dim:
            raise ShapeError(f"{name}: sides have different shapes")
        diff = lhs.matrix.first_difference(rhs.matrix)
        if diff is None:
            result = AxiomResult(name, True)
        else:
            i, j, a, b = diff
            fmt = lhs.field.format
            result = AxiomResult(name, False, Witness(i, j, fmt(a), fmt(b)))
        self.entries.append(result)
        return result

    def add_zero(self, name: str, f: ExactMorphism) -> AxiomResult:
        return self.add_equality(name, f, ExactMorphism.zero(f.source, f.target, f.field))

    def add_flag(self, name: str, passed: bool, note: str | None = None) -> AxiomResult:
        result = AxiomResult(name, passed, None, note)
        self.entries.append(result)
        return result

    def extend(self, other: "CheckReport", prefix: str = "") -> None:
        for e in other.entries:
            self.entries.append(AxiomResult(prefix + e.name, e.passed, e.witness, e.note))

    def __getitem__(self, name: str) -> AxiomResult:
        for e in self.entries:
            if e.name == name:
                return e
        raise KeyError(name)

    def names(self) -> list[str]:
        return [e.name for e in self.entries]

    def failures(self) -> list[str]:
        return [e.name for e in self.entries if not e.passed]

    def to_dict(self) -> dict:
        return {
            "subject": self.subject,
            "overall_pass": self.passed,
            "entries": [e.to_dict() for e in self.entries],
        }

    def to_text(self) -> str:
        lines = [f"{self.subject}: {'PASS' if self.passed else 'FAIL'}"]
        for e in self.entries:
            line = f"  [{'pass' if e.passed else 'FAIL'}] {e.name}"
            if e.witness:
                w = e.witness
                line += f"  at ({w.row}, {w.col}): lhs={w.lhs} rhs={w.rhs}"
            if e.note:
                line += f"  ({e.note})"
            lines.append(line)
        return "\n".join(lines)
