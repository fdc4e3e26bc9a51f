"""Seven-valued truth: combination of per-perspective verdicts, coarsenings,
and the display lattice.

The combination consumes a multiset of {T, F, U} verdicts, one per
perspective, and is defined for any perspective count by the count rule: it
is the unique order-independent reading of the seven defining clauses.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .model import ValidationError, Violation


class TriValue(enum.Enum):
    TRUE = "T"
    FALSE = "F"
    UNKNOWN = "U"

    def __str__(self):
        return self.value

    @classmethod
    def parse(cls, text) -> "TriValue":
        if isinstance(text, cls):
            return text
        for v in cls:
            if v.value == text:
                return v
        raise ValidationError(Violation("tri-value", f"not a tri value: {text!r}"))


class SevenValue(enum.Enum):
    TRUE = "T"
    SOMETIMES_TRUE = "sT"
    UNKNOWN = "U"
    CONTRADICTORY = "K"
    FULLY_CONTRADICTORY = "fK"
    SOMETIMES_FALSE = "sF"
    FALSE = "F"

    def __str__(self):
        return self.value

    @classmethod
    def parse(cls, text) -> "SevenValue":
        if isinstance(text, cls):
            return text
        for v in cls:
            if v.value == text:
                return v
        raise ValidationError(Violation("seven-value", f"not a seven value: {text!r}"))

    @property
    def dual(self) -> "SevenValue":
        return _DUAL[self]


_DUAL = {
    SevenValue.TRUE: SevenValue.FALSE,
    SevenValue.SOMETIMES_TRUE: SevenValue.SOMETIMES_FALSE,
    SevenValue.UNKNOWN: SevenValue.UNKNOWN,
    SevenValue.CONTRADICTORY: SevenValue.CONTRADICTORY,
    SevenValue.FULLY_CONTRADICTORY: SevenValue.FULLY_CONTRADICTORY,
    SevenValue.SOMETIMES_FALSE: SevenValue.SOMETIMES_TRUE,
    SevenValue.FALSE: SevenValue.TRUE,
}


class FourValue(enum.Enum):
    TRUE = "T4"
    UNKNOWN = "U4"
    CONTRADICTORY = "K4"
    FALSE = "F4"

    def __str__(self):
        return self.value


class ThreeValue(enum.Enum):
    TRUE = "T3"
    OTHER = "Other3"
    FALSE = "F3"

    def __str__(self):
        return self.value


def combine(verdicts: Iterable) -> SevenValue:
    """Count rule over per-perspective tri verdicts.

    With c_T, c_F, c_U the counts: T iff no F and no U; F iff no T and no U;
    U iff neither T nor F occurs; sT iff T and U occur without F; sF iff F
    and U occur without T; K iff T and F occur without U; fK iff all three.
    """
    vals = [TriValue.parse(v) for v in verdicts]
    if not vals:
        raise ValidationError(Violation("combine-empty",
                                        "at least one perspective required"))
    ct = sum(1 for v in vals if v is TriValue.TRUE)
    cf = sum(1 for v in vals if v is TriValue.FALSE)
    cu = sum(1 for v in vals if v is TriValue.UNKNOWN)
    if cf == 0 and cu == 0:
        return SevenValue.TRUE
    if ct == 0 and cu == 0:
        return SevenValue.FALSE
    if ct == 0 and cf == 0:
        return SevenValue.UNKNOWN
    if ct > 0 and cu > 0 and cf == 0:
        return SevenValue.SOMETIMES_TRUE
    if cf > 0 and cu > 0 and ct == 0:
        return SevenValue.SOMETIMES_FALSE
    if ct > 0 and cf > 0 and cu == 0:
        return SevenValue.CONTRADICTORY
    return SevenValue.FULLY_CONTRADICTORY


_TO_FOUR = {
    SevenValue.TRUE: FourValue.TRUE,
    SevenValue.SOMETIMES_TRUE: FourValue.TRUE,
    SevenValue.UNKNOWN: FourValue.UNKNOWN,
    SevenValue.CONTRADICTORY: FourValue.CONTRADICTORY,
    SevenValue.FULLY_CONTRADICTORY: FourValue.CONTRADICTORY,
    SevenValue.SOMETIMES_FALSE: FourValue.FALSE,
    SevenValue.FALSE: FourValue.FALSE,
}

_TO_THREE = {
    FourValue.TRUE: ThreeValue.TRUE,
    FourValue.UNKNOWN: ThreeValue.OTHER,
    FourValue.CONTRADICTORY: ThreeValue.OTHER,
    FourValue.FALSE: ThreeValue.FALSE,
}


def coarsen_to_four(v: SevenValue) -> FourValue:
    return _TO_FOUR[SevenValue.parse(v)]


def coarsen_to_three(v: FourValue) -> ThreeValue:
    if isinstance(v, str):
        v = next(f for f in FourValue if f.value == v)
    return _TO_THREE[v]


def belnap_classify(verdicts: Iterable) -> FourValue:
    """Directly classify by presence of supporting/opposing perspectives."""
    vals = [TriValue.parse(v) for v in verdicts]
    if not vals:
        raise ValidationError(Violation("combine-empty",
                                        "at least one perspective required"))
    has_t = any(v is TriValue.TRUE for v in vals)
    has_f = any(v is TriValue.FALSE for v in vals)
    if has_t and has_f:
        return FourValue.CONTRADICTORY
    if has_t:
        return FourValue.TRUE
    if has_f:
        return FourValue.FALSE
    return FourValue.UNKNOWN


class TruthLattice:
    """Display order of the seven values.

    Layers, top to bottom: T; sT; the antichain U, fK, K; sF; F. The dual
    swap T<->F, sT<->sF is an order-reversing involution fixing the middle
    layer.
    """

    LAYERS: tuple[tuple[SevenValue, ...], ...] = (
        (SevenValue.TRUE,),
        (SevenValue.SOMETIMES_TRUE,),
        (SevenValue.UNKNOWN, SevenValue.FULLY_CONTRADICTORY, SevenValue.CONTRADICTORY),
        (SevenValue.SOMETIMES_FALSE,),
        (SevenValue.FALSE,),
    )

    _RANK = {v: i for i, layer in enumerate(LAYERS) for v in layer}

    @classmethod
    def leq(cls, a: SevenValue, b: SevenValue) -> bool:
        """a below-or-equal b in the display order (F at the bottom)."""
        a = SevenValue.parse(a)
        b = SevenValue.parse(b)
        if a is b:
            return True
        ra, rb = cls._RANK[a], cls._RANK[b]
        if ra == rb:
            return False  # middle layer is an antichain
        return ra > rb

    @classmethod
    def join(cls, a: SevenValue, b: SevenValue) -> SevenValue:
        if cls.leq(a, b):
            return SevenValue.parse(b)
        if cls.leq(b, a):
            return SevenValue.parse(a)
        # both in the middle antichain: least upper bound is sT
        return SevenValue.SOMETIMES_TRUE

    @classmethod
    def meet(cls, a: SevenValue, b: SevenValue) -> SevenValue:
        if cls.leq(a, b):
            return SevenValue.parse(a)
        if cls.leq(b, a):
            return SevenValue.parse(b)
        return SevenValue.SOMETIMES_FALSE

    @classmethod
    def dual(cls, v: SevenValue) -> SevenValue:
        return SevenValue.parse(v).dual


@dataclass(frozen=True)
class RelationMatrix:
    """A square matrix of SevenValue cells over an ordered alternative list."""

    alternatives: tuple[str, ...]
    cells: Mapping[tuple[str, str], SevenValue]

    def __post_init__(self):
        alts = tuple(self.alternatives)
        cells = {}
        for a in alts:
            for b in alts:
                try:
                    cells[(a, b)] = SevenValue.parse(self.cells[(a, b)])
                except KeyError:
                    raise ValidationError(Violation(
                        "matrix-missing", f"missing cell ({a},{b})"))
        object.__setattr__(self, "alternatives", alts)
        object.__setattr__(self, "cells", cells)

    def cell(self, a: str, b: str) -> SevenValue:
        return self.cells[(a, b)]

    def rows(self) -> list[list[SevenValue]]:
        return [[self.cells[(a, b)] for b in self.alternatives]
                for a in self.alternatives]

    def to_json(self) -> list[list[str]]:
        return [[v.value for v in row] for row in self.rows()]

    @classmethod
    def from_rows(cls, alternatives: Sequence[str], rows) -> "RelationMatrix":
        alts = tuple(alternatives)
        cells = {}
        for a, row in zip(alts, rows, strict=True):
            for b, v in zip(alts, row, strict=True):
                cells[(a, b)] = SevenValue.parse(v)
        return cls(alternatives=alts, cells=cells)

    def coarsen_four(self) -> list[list[FourValue]]:
        return [[coarsen_to_four(v) for v in row] for row in self.rows()]

    def coarsen_three(self) -> list[list[ThreeValue]]:
        return [[coarsen_to_three(coarsen_to_four(v)) for v in row]
                for row in self.rows()]
