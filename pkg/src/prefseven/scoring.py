"""Gain/loss value schemes over seven-valued relations, the global score,
and the final weak-order ranking.

A scheme assigns a gain to T and sT cells in the row direction and a loss
to F and sF cells; U, K and fK carry no value. The inverse-direction values
are tied by symmetry (the value of "b over a" in class H equals the value
of "a over b" in H), so four rationals determine the scheme.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .model import ValidationError, Violation
from .rationals import format_rational, number_json, parse_rational
from .sevenlogic import RelationMatrix, SevenValue

ZERO = Fraction(0)


@dataclass(frozen=True)
class GainLossScheme:
    v_T: Fraction
    v_sT: Fraction
    v_sF: Fraction
    v_F: Fraction

    def __post_init__(self):
        for name in ("v_T", "v_sT", "v_sF", "v_F"):
            object.__setattr__(self, name, parse_rational(getattr(self, name)))

    def to_json(self) -> dict:
        return {k: number_json(getattr(self, k))
                for k in ("v_T", "v_sT", "v_sF", "v_F")}

    def gain(self, v: SevenValue) -> Fraction:
        if v is SevenValue.TRUE:
            return self.v_T
        if v is SevenValue.SOMETIMES_TRUE:
            return self.v_sT
        return ZERO

    def loss(self, v: SevenValue) -> Fraction:
        if v is SevenValue.FALSE:
            return self.v_F
        if v is SevenValue.SOMETIMES_FALSE:
            return self.v_sF
        return ZERO


@dataclass(frozen=True)
class CardCounts:
    """Blank cards between adjacent value classes, bottom to top:
    F..sF, sF..{U,K,fK}, {U,K,fK}..sT, sT..T."""

    e_F_sF: int
    e_sF_mid: int
    e_mid_sT: int
    e_sT_T: int

    def __post_init__(self):
        for name in ("e_F_sF", "e_sF_mid", "e_mid_sT", "e_sT_T"):
            value = getattr(self, name)
            if not isinstance(value, int) or isinstance(value, bool) or value < 0:
                raise ValidationError(Violation(
                    "cards", f"{name} must be a nonnegative integer"))

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.e_F_sF, self.e_sF_mid, self.e_mid_sT, self.e_sT_T)


def basic_scheme() -> GainLossScheme:
    """Unit gain/loss for firm classes, half for the sometimes classes."""
    return GainLossScheme(Fraction(1), Fraction(1, 2), Fraction(1, 2), Fraction(1))


def deck_scheme(cards: CardCounts) -> GainLossScheme:
    """Card counts to normalized values: each gap adds its cards plus one
    step; the larger of the T and F levels normalizes to 1."""
    if not isinstance(cards, CardCounts):
        cards = CardCounts(*cards)
    nu_sT = cards.e_mid_sT + 1
    nu_T = nu_sT + cards.e_sT_T + 1
    nu_sF = cards.e_sF_mid + 1
    nu_F = nu_sF + cards.e_F_sF + 1
    mx = max(nu_T, nu_F)
    return GainLossScheme(Fraction(nu_T, mx), Fraction(nu_sT, mx),
                          Fraction(nu_sF, mx), Fraction(nu_F, mx))


def validate_scheme(s: GainLossScheme) -> list[Violation]:
    out = []
    for name in ("v_T", "v_sT", "v_sF", "v_F"):
        if getattr(s, name) < 0:
            out.append(Violation("scheme-negative", f"{name} must be >= 0", name))
    if s.v_sT > s.v_T:
        out.append(Violation("scheme-order", "v_sT cannot exceed v_T", "v_sT"))
    if s.v_sF > s.v_F:
        out.append(Violation("scheme-order", "v_sF cannot exceed v_F", "v_sF"))
    if max(s.v_T, s.v_F) > 1:
        out.append(Violation("scheme-scale", "max(v_T, v_F) cannot exceed 1"))
    return out


@dataclass(frozen=True)
class ScoreBoard:
    alternatives: tuple[str, ...]
    scores: dict

    def score(self, a: str) -> Fraction:
        return self.scores[a]

    def to_json(self) -> dict:
        return {a: number_json(self.scores[a]) for a in self.alternatives}


def global_score(matrix: RelationMatrix, scheme: GainLossScheme) -> ScoreBoard:
    """Net flow: for each a, sum over b of the gains a collects from its
    relation to b, minus its losses, minus the same quantity seen from b."""
    alts = matrix.alternatives
    for a in alts:
        if matrix.cell(a, a) is not SevenValue.TRUE:
            raise ValidationError(Violation(
                "matrix-diagonal", f"diagonal cell ({a},{a}) must be T"))
    bad = validate_scheme(scheme)
    if bad:
        raise ValidationError(bad)
    scores = {}
    for a in alts:
        total = ZERO
        for b in alts:
            if a == b:
                continue
            fwd = matrix.cell(a, b)
            rev = matrix.cell(b, a)
            total += scheme.gain(fwd) - scheme.loss(fwd)
            total -= scheme.gain(rev) - scheme.loss(rev)
        scores[a] = total
    return ScoreBoard(alternatives=alts, scores=scores)


def rank(board: ScoreBoard) -> tuple[tuple[str, ...], ...]:
    """Descending-score weak order; equal scores form tie groups."""
    order = sorted(board.alternatives,
                   key=lambda a: (-board.scores[a], board.alternatives.index(a)))
    groups: list[list[str]] = []
    prev = None
    for a in order:
        s = board.scores[a]
        if groups and s == prev:
            groups[-1].append(a)
        else:
            groups.append([a])
        prev = s
    return tuple(tuple(g) for g in groups)


def ranking_string(groups: Sequence[Sequence[str]]) -> str:
    return " -> ".join(" ~ ".join(g) for g in groups)
