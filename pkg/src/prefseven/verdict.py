"""Per-perspective tri-valued truth of "a is at least as good as b".

Three engines: exact LP over the weight polytope, exhaustive vertex tests,
and SMAA thresholding of pairwise winning indices. Value-function and
outranking aggregation share the engines; only the compared quantity
differs (utility difference vs concordance minus the acceptance level).

Boundary conventions: an exact minimum of 0 is True (ties count in favor);
falsity requires a strictly negative maximum. In SMAA, a sampled tie counts
as a win for the row alternative.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from .model import (PerformanceTable, ValidationError, Violation,
                    WeightVector, utility)
from .polytope import WeightPolytope
from .rationals import format_rational, number_json, parse_rational, vector_json
from .sevenlogic import TriValue

ZERO = Fraction(0)
ONE = Fraction(1)


@dataclass(frozen=True)
class OutrankingParams:
    """Indifference threshold q (grade units) and concordance level k."""

    q: Fraction = Fraction(0)
    k: Fraction = Fraction(13, 20)

    def __post_init__(self):
        object.__setattr__(self, "q", parse_rational(self.q))
        object.__setattr__(self, "k", parse_rational(self.k))
        if self.q < 0:
            raise ValidationError(Violation("outranking-q", "q must be >= 0"))
        if not (Fraction(1, 2) < self.k <= 1):
            raise ValidationError(Violation("outranking-k",
                                            "k must lie in (0.5, 1]"))

    def to_json(self) -> dict:
        return {"q": number_json(self.q), "k": number_json(self.k)}


@dataclass(frozen=True)
class LPEvidence:
    minimum: Fraction
    maximum: Fraction
    argmin: WeightVector
    argmax: WeightVector

    def to_json(self) -> dict:
        return {
            "engine": "lp",
            "min": number_json(self.minimum),
            "max": number_json(self.maximum),
            "argmin": vector_json(self.argmin.values),
            "argmax": vector_json(self.argmax.values),
        }


@dataclass(frozen=True)
class VertexEvidence:
    """Sign split of the test quantity across vertices (indices into the
    polytope's sorted vertex list); rows with the quantity >= 0 support."""

    supporting: tuple[int, ...]
    opposing: tuple[int, ...]
    values: tuple[Fraction, ...]

    def to_json(self) -> dict:
        return {
            "engine": "vertices",
            "supporting": list(self.supporting),
            "opposing": list(self.opposing),
            "values": [number_json(v) for v in self.values],
        }


@dataclass(frozen=True)
class SmaaEvidence:
    pwi: Fraction
    threshold: Fraction
    samples: int
    win_index: int | None
    loss_index: int | None

    def to_json(self) -> dict:
        return {
            "engine": "smaa",
            "pwi": number_json(self.pwi),
            "threshold": number_json(self.threshold),
            "samples": self.samples,
            "win_index": self.win_index,
            "loss_index": self.loss_index,
        }


@dataclass(frozen=True)
class TriVerdict:
    value: TriValue
    evidence: object = None

    def __str__(self):
        return self.value.value


@dataclass(frozen=True)
class PWIMatrix:
    """Estimated Pr(a >= b) per ordered pair, from one shared sample set."""

    alternatives: tuple[str, ...]
    indices: dict
    samples: int
    seed: object

    def get(self, a: str, b: str) -> Fraction:
        return self.indices[(a, b)]

    def to_json(self) -> dict:
        return {
            "samples": self.samples,
            "indices": {f"{a},{b}": number_json(v)
                        for (a, b), v in sorted(self.indices.items())},
        }


def _verdict_from_optima(minimum: Fraction, maximum: Fraction) -> TriValue:
    if minimum >= 0:
        return TriValue.TRUE
    if maximum < 0:
        return TriValue.FALSE
    return TriValue.UNKNOWN


def _value_objective(table: PerformanceTable, a: str, b: str):
    ra = table.row(a)
    rb = table.row(b)
    return [x - y for x, y in zip(ra, rb)]


def concordance(table: PerformanceTable, pair: tuple[str, str],
                w: WeightVector, q) -> Fraction:
    """Total weight of criteria where a scores at least b's grade minus q."""
    a, b = pair
    q = parse_rational(q)
    ra = table.row(a)
    rb = table.row(b)
    return sum((wj for wj, ga, gb in zip(w, ra, rb) if ga >= gb - q), ZERO)


def _concordance_objective(table: PerformanceTable, a: str, b: str, q: Fraction):
    ra = table.row(a)
    rb = table.row(b)
    return [ONE if ga >= gb - q else ZERO for ga, gb in zip(ra, rb)]


def tri_value_lp(table: PerformanceTable, pair: tuple[str, str],
                 poly: WeightPolytope) -> TriVerdict:
    """True iff min U(a)-U(b) >= 0 over the polytope; False iff max < 0."""
    a, b = pair
    obj = _value_objective(table, a, b)
    lo, hi = poly.optimize_span(obj)
    return TriVerdict(
        value=_verdict_from_optima(lo.value, hi.value),
        evidence=LPEvidence(lo.value, hi.value, lo.argument, hi.argument))


def tri_outranking_lp(table: PerformanceTable, pair: tuple[str, str],
                      poly: WeightPolytope, params: OutrankingParams) -> TriVerdict:
    """Same sign tests applied to the concordance LP: min/max of C - k.

    The concordant criterion set is fixed by (pair, q), so the objective has
    0/1 coefficients and k only shifts the optima.
    """
    a, b = pair
    obj = _concordance_objective(table, a, b, params.q)
    lo, hi = poly.optimize_span(obj)
    return TriVerdict(
        value=_verdict_from_optima(lo.value - params.k, hi.value - params.k),
        evidence=LPEvidence(lo.value - params.k, hi.value - params.k,
                            lo.argument, hi.argument))


def _tri_over_vertices(values: Sequence[Fraction]) -> TriValue:
    if not values:
        raise ValidationError(Violation("vertices-empty",
                                        "at least one vertex required"))
    if all(v >= 0 for v in values):
        return TriValue.TRUE
    if all(v < 0 for v in values):
        return TriValue.FALSE
    return TriValue.UNKNOWN


def _vertex_verdict(vertices, objective, shift: Fraction = ZERO) -> TriVerdict:
    vals = []
    for v in vertices:
        vals.append(sum((c * x for c, x in zip(objective, v)), ZERO) - shift)
    supporting = tuple(i for i, v in enumerate(vals) if v >= 0)
    opposing = tuple(i for i, v in enumerate(vals) if v < 0)
    return TriVerdict(
        value=_tri_over_vertices(vals),
        evidence=VertexEvidence(supporting, opposing, tuple(vals)))


def tri_value_vertices(table: PerformanceTable, pair: tuple[str, str],
                       vertices) -> TriVerdict:
    """True iff U(a) >= U(b) at every vertex; False iff strictly below at all."""
    if isinstance(vertices, WeightPolytope):
        vertices = vertices.enumerate_vertices()
    a, b = pair
    return _vertex_verdict(tuple(vertices), _value_objective(table, a, b))


def tri_outranking_vertices(table: PerformanceTable, pair: tuple[str, str],
                            vertices, params: OutrankingParams) -> TriVerdict:
    if isinstance(vertices, WeightPolytope):
        vertices = vertices.enumerate_vertices()
    a, b = pair
    obj = _concordance_objective(table, a, b, params.q)
    return _vertex_verdict(tuple(vertices), obj, shift=params.k)


def pairwise_winning_index(table: PerformanceTable, pair: tuple[str, str],
                           samples, mode: str = "value",
                           params: OutrankingParams | None = None) -> Fraction:
    """Fraction of samples where the pair's test holds; ties favor the row.

    samples is the shared per-perspective weight sample array (n x criteria).
    """
    arr = np.asarray(samples, dtype=float)
    if arr.ndim != 2 or arr.shape[0] == 0:
        raise ValidationError(Violation("samples-empty",
                                        "a nonempty sample set is required"))
    wins = _win_mask(table, pair, arr, mode, params)
    return Fraction(int(wins.sum()), arr.shape[0])


def _win_mask(table, pair, arr, mode, params):
    a, b = pair
    if mode == "value":
        diff = np.array([float(x) for x in _value_objective(table, a, b)])
        return arr @ diff >= 0.0
    if mode == "outranking":
        if params is None:
            raise ValidationError(Violation("outranking-params",
                                            "outranking mode needs params"))
        conc = np.array([float(x)
                         for x in _concordance_objective(table, a, b, params.q)])
        return arr @ conc >= float(params.k)
    raise ValidationError(Violation("mode", f"unknown mode {mode!r}"))


def smaa_matrix(table: PerformanceTable, alternatives: Sequence[str],
                samples, mode: str = "value",
                params: OutrankingParams | None = None,
                seed=None) -> PWIMatrix:
    """All ordered-pair winning indices from one shared sample set."""
    arr = np.asarray(samples, dtype=float)
    indices = {}
    for a in alternatives:
        for b in alternatives:
            if a == b:
                indices[(a, b)] = ONE
                continue
            wins = _win_mask(table, (a, b), arr, mode, params)
            indices[(a, b)] = Fraction(int(wins.sum()), arr.shape[0])
    return PWIMatrix(alternatives=tuple(alternatives), indices=indices,
                     samples=arr.shape[0], seed=seed)


def tri_from_pwi(pwi, t) -> TriVerdict:
    """Threshold rule: True iff pwi >= t, False iff pwi <= 1 - t."""
    t = parse_rational(t)
    if not (Fraction(1, 2) < t <= 1):
        raise ValidationError(Violation("threshold", "t must lie in (0.5, 1]"))
    pwi = parse_rational(pwi)
    if pwi >= t:
        value = TriValue.TRUE
    elif pwi <= 1 - t:
        value = TriValue.FALSE
    else:
        value = TriValue.UNKNOWN
    return TriVerdict(value=value, evidence=None)


def smaa_verdict(pwi_matrix: PWIMatrix, pair: tuple[str, str], t,
                 win_index: int | None = None,
                 loss_index: int | None = None) -> TriVerdict:
    base = tri_from_pwi(pwi_matrix.get(*pair), t)
    return TriVerdict(value=base.value, evidence=SmaaEvidence(
        pwi=pwi_matrix.get(*pair), threshold=parse_rational(t),
        samples=pwi_matrix.samples, win_index=win_index, loss_index=loss_index))


def first_flip_indices(table: PerformanceTable, pair: tuple[str, str],
                       samples, mode: str, params: OutrankingParams | None):
    """Indices of the first winning and first losing sample, if any.

    Recorded in SMAA evidence so explanations can point at reproducible
    witness draws.
    """
    arr = np.asarray(samples, dtype=float)
    wins = _win_mask(table, pair, arr, mode, params)
    win_index = int(np.argmax(wins)) if wins.any() else None
    losses = ~wins
    loss_index = int(np.argmax(losses)) if losses.any() else None
    return win_index, loss_index
