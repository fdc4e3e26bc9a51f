"""Domain model: criteria, performance tables, weight vectors, perspectives.

All grades and weights are exact rationals. Types are immutable; operations
are pure. Alternatives and criteria are addressed by string id at the API
surface and by dense index internally.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .rationals import parse_rational


class PrefsevenError(Exception):
    """Base class for package errors."""


class ValidationError(PrefsevenError):
    """Raised when inputs violate a documented precondition.

    Carries the machine-readable violations so services can surface them.
    """

    def __init__(self, *violations):
        flat: list[Violation] = []
        for v in violations:
            if isinstance(v, Violation):
                flat.append(v)
            else:
                flat.extend(v)
        self.violations = flat
        super().__init__("; ".join(v.message for v in self.violations))


@dataclass(frozen=True)
class Violation:
    code: str
    message: str
    where: str = ""

    def to_json(self) -> dict:
        return {"code": self.code, "message": self.message, "where": self.where}


def _fail(code: str, message: str, where: str = ""):
    raise ValidationError(Violation(code, message, where))


@dataclass(frozen=True)
class Criterion:
    """A gain-type criterion with rational scale bounds (default 0..100)."""

    id: str
    name: str = ""
    scale_min: Fraction = Fraction(0)
    scale_max: Fraction = Fraction(100)

    def __post_init__(self):
        object.__setattr__(self, "scale_min", parse_rational(self.scale_min))
        object.__setattr__(self, "scale_max", parse_rational(self.scale_max))
        if not self.id:
            _fail("criterion-id", "criterion id must be nonempty")
        if self.scale_min >= self.scale_max:
            _fail("criterion-scale",
                  f"criterion {self.id}: scale_min must be < scale_max")


@dataclass(frozen=True)
class PerformanceTable:
    """Alternatives x criteria grade matrix, one row per alternative.

    The constructor enforces structural consistency (dimensions, numeric
    grades); range and uniqueness checks are the job of validate_table so
    that a malformed table can be examined rather than refused outright.
    """

    criteria: tuple[Criterion, ...]
    alternatives: tuple[str, ...]
    grades: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        criteria = tuple(self.criteria)
        alternatives = tuple(str(a) for a in self.alternatives)
        rows = []
        for alt, row in zip(alternatives, self.grades, strict=True):
            if len(row) != len(criteria):
                _fail("table-shape",
                      f"row {alt}: expected {len(criteria)} grades, got {len(row)}",
                      alt)
            rows.append(tuple(parse_rational(g) for g in row))
        if len(rows) != len(alternatives):
            _fail("table-shape", "one grade row per alternative required")
        object.__setattr__(self, "criteria", criteria)
        object.__setattr__(self, "alternatives", alternatives)
        object.__setattr__(self, "grades", tuple(rows))

    @property
    def criterion_ids(self) -> tuple[str, ...]:
        return tuple(c.id for c in self.criteria)

    def index(self, alternative: str) -> int:
        try:
            return self.alternatives.index(alternative)
        except ValueError:
            _fail("unknown-alternative", f"unknown alternative {alternative!r}",
                  alternative)

    def row(self, alternative: str) -> tuple[Fraction, ...]:
        return self.grades[self.index(alternative)]

    def value(self, alternative: str, criterion_id: str) -> Fraction:
        try:
            j = self.criterion_ids.index(criterion_id)
        except ValueError:
            _fail("unknown-criterion", f"unknown criterion {criterion_id!r}",
                  criterion_id)
        return self.grades[self.index(alternative)][j]


def validate_table(table: PerformanceTable) -> list[Violation]:
    """Return violations (duplicate ids, out-of-range grades); empty means ok."""
    out: list[Violation] = []
    seen = set()
    for a in table.alternatives:
        if a in seen:
            out.append(Violation("duplicate-id", f"duplicate alternative id {a!r}", a))
        seen.add(a)
    seen = set()
    for c in table.criteria:
        if c.id in seen:
            out.append(Violation("duplicate-id", f"duplicate criterion id {c.id!r}", c.id))
        seen.add(c.id)
    for alt, row in zip(table.alternatives, table.grades):
        for crit, g in zip(table.criteria, row):
            if not (crit.scale_min <= g <= crit.scale_max):
                out.append(Violation(
                    "out-of-range",
                    f"grade {g} of {alt} on {crit.id} outside "
                    f"[{crit.scale_min}, {crit.scale_max}]",
                    f"{alt}/{crit.id}"))
    return out


@dataclass(frozen=True)
class WeightVector:
    """Nonnegative weights summing to exactly 1."""

    values: tuple[Fraction, ...]

    def __post_init__(self):
        vals = tuple(parse_rational(v) for v in self.values)
        object.__setattr__(self, "values", vals)
        if any(v < 0 for v in vals):
            _fail("weight-negative", f"weights must be nonnegative, got {vals}")
        if sum(vals) != 1:
            _fail("weight-sum", f"weights must sum to 1, got {sum(vals)}")

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)


@dataclass(frozen=True)
class Perspective:
    """A named region of weight space.

    kind == "perturbation": box of +-radius relative perturbations around a
    central weight vector, intersected with the simplex.
    kind == "elicited": weights compatible with holistic pairwise comparisons
    (each pair (a, b) read as "a at least as good as b").
    """

    name: str
    kind: str
    central: WeightVector | None = None
    radius: Fraction | None = None
    comparisons: tuple[tuple[str, str], ...] = ()

    def __post_init__(self):
        if self.kind not in ("perturbation", "elicited"):
            _fail("perspective-kind", f"unknown perspective kind {self.kind!r}",
                  self.name)
        if self.kind == "perturbation":
            if self.central is None or self.radius is None:
                _fail("perspective-fields",
                      f"perspective {self.name}: perturbation needs central and radius",
                      self.name)
            radius = parse_rational(self.radius)
            if not (0 <= radius < 1):
                _fail("perspective-radius",
                      f"perspective {self.name}: radius must be in [0, 1)", self.name)
            object.__setattr__(self, "radius", radius)
            object.__setattr__(self, "comparisons", ())
        else:
            comps = tuple((str(a), str(b)) for a, b in self.comparisons)
            for a, b in comps:
                if a == b:
                    _fail("comparison-self",
                          f"perspective {self.name}: cannot compare {a!r} to itself",
                          self.name)
            object.__setattr__(self, "comparisons", comps)
            object.__setattr__(self, "central", None)
            object.__setattr__(self, "radius", None)

    @classmethod
    def perturbation(cls, name: str, central, radius) -> "Perspective":
        if not isinstance(central, WeightVector):
            central = WeightVector(tuple(central))
        return cls(name=name, kind="perturbation", central=central, radius=radius)

    @classmethod
    def elicited(cls, name: str, comparisons: Sequence[tuple[str, str]]) -> "Perspective":
        return cls(name=name, kind="elicited", comparisons=tuple(comparisons))


def utility(table: PerformanceTable, alternative: str, w: WeightVector) -> Fraction:
    """Weighted-sum overall evaluation: dot product of grade row and weights."""
    row = table.row(alternative)
    if len(w) != len(row):
        _fail("dimension-mismatch",
              f"weight dimension {len(w)} != criteria count {len(row)}")
    return sum((wj * g for wj, g in zip(w, row)), Fraction(0))
