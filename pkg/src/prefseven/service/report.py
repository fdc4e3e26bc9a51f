"""Session reports: a self-contained JSON document per completed run,
plus an independent consistency checker used by `prefseven verify`."""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from ..model import ValidationError, Violation
from ..rationals import parse_rational
from ..scoring import (CardCounts, GainLossScheme, ScoreBoard, basic_scheme,
                       deck_scheme, global_score, rank, ranking_string,
                       validate_scheme)
from ..sevenlogic import (RelationMatrix, SevenValue, TriValue, coarsen_to_four,
                          coarsen_to_three, combine)
from .config import SessionConfig

SCHEMA = "prefseven/1"


@dataclass(frozen=True)
class SessionReport:
    """Thin wrapper over the report document (a plain JSON-able dict)."""

    doc: dict

    @property
    def version(self) -> int:
        return self.doc["version"]

    @property
    def alternatives(self) -> tuple[str, ...]:
        return tuple(self.doc["alternatives"])

    def config(self) -> SessionConfig:
        return SessionConfig.from_json(self.doc["config"])

    def seven_matrix(self) -> RelationMatrix:
        return RelationMatrix.from_rows(self.alternatives, self.doc["seven"])

    def perspective_block(self, name: str) -> dict:
        for block in self.doc["perspectives"]:
            if block["name"] == name:
                return block
        raise ValidationError(Violation("unknown-perspective",
                                        f"no perspective named {name!r}"))

    def scores(self) -> ScoreBoard:
        vals = {a: parse_rational(self.doc["scores"][a]["exact"])
                for a in self.alternatives}
        return ScoreBoard(self.alternatives, vals)

    def to_json(self) -> dict:
        return self.doc

    @classmethod
    def from_json(cls, doc: dict) -> "SessionReport":
        if not isinstance(doc, dict) or doc.get("schema") != SCHEMA:
            raise ValidationError(Violation(
                "report-schema", f"expected a {SCHEMA} report document"))
        return cls(doc)

    def dumps(self) -> str:
        return json.dumps(self.doc, indent=1, sort_keys=False)


def scheme_from_config(cfg: SessionConfig) -> GainLossScheme:
    if cfg.scheme_type == "deck":
        return deck_scheme(cfg.cards)
    return basic_scheme()


def stage_key(dataset_doc: dict, config: SessionConfig) -> str:
    """Fingerprint of everything the per-perspective verdict stage depends on.

    The SMAA acceptance threshold t is deliberately excluded: it only
    rethresholds already-estimated winning indices.
    """
    cfg = config.to_json()
    parts = {
        "dataset": dataset_doc,
        "perspectives": cfg["perspectives"],
        "mode": cfg["mode"],
        "engine": cfg["engine"],
    }
    if config.mode == "outranking":
        parts["outranking"] = cfg["outranking"]
    if config.engine == "smaa":
        parts["samples"] = config.smaa.samples
        parts["seed"] = config.smaa.seed
    return json.dumps(parts, sort_keys=True)


def _problem(problems, code, message, where=None):
    entry = {"code": code, "message": message}
    if where is not None:
        entry["where"] = where
    problems.append(entry)


def _check_number(problems, obj, where):
    if not isinstance(obj, dict) or "exact" not in obj or "float" not in obj:
        _problem(problems, "number-shape",
                 "numbers must carry exact and float forms", where)
        return None
    try:
        exact = parse_rational(obj["exact"])
    except (ValueError, ZeroDivisionError):
        _problem(problems, "number-exact", f"bad exact value {obj['exact']!r}",
                 where)
        return None
    if abs(float(exact) - float(obj["float"])) > 1e-9:
        _problem(problems, "number-mismatch",
                 "float form disagrees with exact form", where)
    return exact


def verify_report(doc: dict) -> list[dict]:
    """Independent self-consistency pass over a report document.

    Recombines per-perspective verdicts, recomputes coarsenings, scores and
    the ranking, and checks engine evidence against its own verdicts.
    Returns a list of problems; an empty list means the report is coherent.
    """
    problems: list[dict] = []
    if not isinstance(doc, dict):
        return [{"code": "report-shape", "message": "report must be an object"}]
    if doc.get("schema") != SCHEMA:
        _problem(problems, "report-schema", f"schema must be {SCHEMA}")
        return problems
    for key in ("config", "alternatives", "perspectives", "seven", "four",
                "three", "scheme", "scores", "ranking", "ranking_string"):
        if key not in doc:
            _problem(problems, "report-missing", f"missing field {key!r}")
    if problems:
        return problems

    try:
        cfg = SessionConfig.from_json(doc["config"])
    except ValidationError as exc:
        for v in exc.violations:
            _problem(problems, "config-invalid", v.message, v.code)
        return problems

    alts = list(doc["alternatives"])
    n = len(alts)
    if n == 0 or len(set(alts)) != n:
        _problem(problems, "alternatives", "alternatives must be nonempty and unique")
        return problems

    # per-perspective grids
    grids = {}
    for block in doc["perspectives"]:
        name = block.get("name", "?")
        grid = block.get("verdicts")
        if (not isinstance(grid, list) or len(grid) != n or
                any(len(row) != n for row in grid)):
            _problem(problems, "grid-shape",
                     f"perspective {name}: verdict grid must be {n}x{n}", name)
            continue
        try:
            parsed = [[TriValue.parse(v) for v in row] for row in grid]
        except ValueError as exc:
            _problem(problems, "grid-value", f"perspective {name}: {exc}", name)
            continue
        for i in range(n):
            if parsed[i][i] is not TriValue.TRUE:
                _problem(problems, "grid-diagonal",
                         f"perspective {name}: diagonal must be true", name)
        grids[name] = parsed
        _verify_evidence(problems, block, parsed, alts, cfg)

    expected_names = [p.name for p in cfg.perspectives]
    if [b.get("name") for b in doc["perspectives"]] != expected_names:
        _problem(problems, "perspectives-order",
                 "perspective blocks must match the config, in order")
        return problems

    # recombination
    try:
        seven = [[SevenValue.parse(v) for v in row] for row in doc["seven"]]
    except (ValueError, TypeError) as exc:
        _problem(problems, "seven-value", str(exc))
        return problems
    if len(seven) != n or any(len(row) != n for row in seven):
        _problem(problems, "seven-shape", f"seven grid must be {n}x{n}")
        return problems
    if len(grids) == len(expected_names):
        for i in range(n):
            for j in range(n):
                votes = [grids[name][i][j] for name in expected_names]
                want = combine(votes)
                if want is not seven[i][j]:
                    _problem(problems, "recombination",
                             f"cell ({alts[i]},{alts[j]}): perspectives "
                             f"combine to {want} but report says {seven[i][j]}",
                             f"{alts[i]},{alts[j]}")

    # coarsenings
    four = [[str(coarsen_to_four(v)) for v in row] for row in seven]
    three = [[str(coarsen_to_three(coarsen_to_four(v))) for v in row]
             for row in seven]
    if doc["four"] != four:
        _problem(problems, "coarsen-four", "four-valued grid does not match")
    if doc["three"] != three:
        _problem(problems, "coarsen-three", "three-valued grid does not match")

    # scheme and scores
    scheme = scheme_from_config(cfg)
    bad = validate_scheme(scheme)
    for v in bad:
        _problem(problems, "scheme", v.message)
    stored_vals = doc["scheme"].get("values")
    if stored_vals is not None and stored_vals != scheme.to_json():
        _problem(problems, "scheme-values",
                 "stored scheme values do not match the declared scheme")
    matrix = RelationMatrix.from_rows(alts, doc["seven"])
    board = global_score(matrix, scheme)
    total = Fraction(0)
    for a in alts:
        got = _check_number(problems, doc["scores"].get(a), f"scores.{a}")
        if got is None:
            continue
        total += got
        if got != board.score(a):
            _problem(problems, "score",
                     f"score for {a} should be {board.score(a)}", a)
    if total != 0:
        _problem(problems, "score-sum", "scores must sum to zero")

    # ranking
    groups = rank(board)
    want_groups = [list(g) for g in groups]
    if doc["ranking"] != want_groups:
        _problem(problems, "ranking", "ranking groups do not match the scores")
    if doc["ranking_string"] != ranking_string(groups):
        _problem(problems, "ranking-string", "ranking string does not match")
    return problems


def _verify_evidence(problems, block, grid, alts, cfg: SessionConfig):
    name = block.get("name", "?")
    evidence = block.get("evidence", {})
    pwi_doc = block.get("pwi")
    vertices = block.get("vertices")
    n = len(alts)
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            key = f"{alts[i]},{alts[j]}"
            ev = evidence.get(key)
            if ev is None:
                _problem(problems, "evidence-missing",
                         f"perspective {name}: no evidence for {key}", key)
                continue
            verdict = grid[i][j]
            engine = ev.get("engine")
            if engine != cfg.engine:
                _problem(problems, "evidence-engine",
                         f"perspective {name}: evidence engine {engine!r} "
                         f"differs from config", key)
                continue
            if engine == "lp":
                lo = _check_number(problems, ev.get("min"), f"{name}:{key}:min")
                hi = _check_number(problems, ev.get("max"), f"{name}:{key}:max")
                if lo is None or hi is None:
                    continue
                if lo > hi:
                    _problem(problems, "evidence-order",
                             f"perspective {name}: min exceeds max", key)
                want = (TriValue.TRUE if lo >= 0 else
                        TriValue.FALSE if hi < 0 else TriValue.UNKNOWN)
                if want is not verdict:
                    _problem(problems, "evidence-verdict",
                             f"perspective {name}: optima imply {want} "
                             f"but grid says {verdict}", key)
            elif engine == "vertices":
                vals = [_check_number(problems, v, f"{name}:{key}:values")
                        for v in ev.get("values", [])]
                if vertices is not None and len(vals) != len(vertices):
                    _problem(problems, "evidence-vertices",
                             f"perspective {name}: value count differs from "
                             f"vertex count", key)
                if any(v is None for v in vals) or not vals:
                    continue
                sup = set(ev.get("supporting", []))
                opp = set(ev.get("opposing", []))
                want_sup = {idx for idx, v in enumerate(vals) if v >= 0}
                if sup != want_sup or opp != set(range(len(vals))) - want_sup:
                    _problem(problems, "evidence-split",
                             f"perspective {name}: sign split mismatch", key)
                want = (TriValue.TRUE if len(opp) == 0 else
                        TriValue.FALSE if len(sup) == 0 else TriValue.UNKNOWN)
                if want is not verdict:
                    _problem(problems, "evidence-verdict",
                             f"perspective {name}: vertex signs imply {want} "
                             f"but grid says {verdict}", key)
            elif engine == "smaa":
                pwi = _check_number(problems, ev.get("pwi"), f"{name}:{key}:pwi")
                if pwi is None:
                    continue
                if not (0 <= pwi <= 1):
                    _problem(problems, "pwi-range",
                             f"perspective {name}: pwi outside [0,1]", key)
                t = cfg.smaa.t
                want = (TriValue.TRUE if pwi >= t else
                        TriValue.FALSE if pwi <= 1 - t else TriValue.UNKNOWN)
                if want is not verdict:
                    _problem(problems, "evidence-verdict",
                             f"perspective {name}: pwi and threshold imply "
                             f"{want} but grid says {verdict}", key)
                if ev.get("samples") != cfg.smaa.samples:
                    _problem(problems, "evidence-samples",
                             f"perspective {name}: sample count differs "
                             f"from config", key)
                if pwi_doc is not None:
                    stored = pwi_doc.get("indices", {}).get(key)
                    got = _check_number(problems, stored, f"{name}:{key}:pwi")
                    if got is not None and got != pwi:
                        _problem(problems, "pwi-mismatch",
                                 f"perspective {name}: evidence pwi differs "
                                 f"from the matrix", key)
            else:
                _problem(problems, "evidence-engine",
                         f"perspective {name}: unknown engine {engine!r}", key)
    if pwi_doc is not None:
        for i in range(n):
            for j in range(n):
                if i < j:
                    ab = _check_number(problems,
                                       pwi_doc.get("indices", {}).get(
                                           f"{alts[i]},{alts[j]}"),
                                       f"{name}:pwi")
                    ba = _check_number(problems,
                                       pwi_doc.get("indices", {}).get(
                                           f"{alts[j]},{alts[i]}"),
                                       f"{name}:pwi")
                    if ab is not None and ba is not None and ab + ba < 1:
                        _problem(problems, "pwi-overlap",
                                 f"perspective {name}: ties must count for "
                                 f"both rows, so pwi(a,b)+pwi(b,a) >= 1",
                                 f"{alts[i]},{alts[j]}")
