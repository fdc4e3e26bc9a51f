"""Pipeline execution and on-disk session storage.

A session directory holds dataset.json, config.json and an append-only
report-NNN.json series; what-if runs derive new versions from the latest
report without mutating the stored config.
"""
from __future__ import annotations

import json
import os
import threading
import uuid
from pathlib import Path

from ..model import (PerformanceTable, Perspective, PrefsevenError,
                     ValidationError, Violation, validate_table)
from ..polytope import (WeightPolytope, build_ordinal_regression,
                        build_perturbation, conflicting_comparisons)
from ..rationals import number_json, parse_rational, vector_json
from ..scoring import global_score, rank, ranking_string
from ..sevenlogic import (RelationMatrix, TriValue, coarsen_to_four,
                          coarsen_to_three, combine)
from ..verdict import (first_flip_indices, smaa_matrix, smaa_verdict,
                       tri_outranking_lp, tri_outranking_vertices,
                       tri_value_lp, tri_value_vertices)
from .config import SessionConfig
from .dataset import load_dataset, table_json
from .report import SCHEMA, SessionReport, scheme_from_config, stage_key


class InfeasibleElicitationError(PrefsevenError):
    """No weight vector satisfies the stated comparisons for a perspective."""

    def __init__(self, perspective: str, conflicts):
        self.perspective = perspective
        self.conflicts = [tuple(c) for c in conflicts]
        listed = "; ".join(f"{a} over {b}" for a, b in self.conflicts)
        super().__init__(
            f"perspective {perspective!r}: the stated comparisons admit no "
            f"weight vector (conflicting: {listed})")


class SessionNotFoundError(PrefsevenError):
    pass


class SessionStateError(PrefsevenError):
    """Operation out of order, e.g. asking for a report before any run."""

    def __init__(self, code: str, message: str):
        self.code = code
        super().__init__(message)


def _build_polytope(table: PerformanceTable, p: Perspective) -> WeightPolytope:
    if p.kind == "perturbation":
        if len(p.central.values) != len(table.criteria):
            raise ValidationError(Violation(
                "perspective-dimension",
                f"perspective {p.name}: {len(p.central.values)} weights for "
                f"{len(table.criteria)} criteria"))
        return build_perturbation(p.central, p.radius,
                                  names=table.criterion_ids)
    poly = build_ordinal_regression(table, p.comparisons)
    if poly.is_empty():
        raise InfeasibleElicitationError(
            p.name, conflicting_comparisons(table, p.comparisons))
    return poly


def _pair_verdict(table, pair, cfg: SessionConfig, poly, vertices):
    if cfg.engine == "lp":
        if cfg.mode == "outranking":
            return tri_outranking_lp(table, pair, poly, cfg.outranking)
        return tri_value_lp(table, pair, poly)
    if cfg.mode == "outranking":
        return tri_outranking_vertices(table, pair, vertices, cfg.outranking)
    return tri_value_vertices(table, pair, vertices)


def _cold_perspective_block(table, cfg: SessionConfig, p: Perspective,
                            index: int) -> dict:
    poly = _build_polytope(table, p)
    alts = table.alternatives
    block = {"name": p.name, "kind": p.kind,
             "polytope": {"constraints": [c.to_json() for c in poly.constraints]},
             "vertices": None, "pwi": None}
    vertices = None
    if cfg.engine == "vertices":
        vertices = poly.enumerate_vertices()
        block["vertices"] = [vector_json(v) for v in vertices]
    grid = [["T"] * len(alts) for _ in alts]
    evidence = {}
    if cfg.engine == "smaa":
        # one shared sample set per perspective, keyed on (seed, position)
        samples = poly.sample_uniform(cfg.smaa.samples,
                                      seed=[cfg.smaa.seed, index])
        mode_params = cfg.outranking if cfg.mode == "outranking" else None
        pwi = smaa_matrix(table, alts, samples, mode=cfg.mode,
                          params=mode_params, seed=cfg.smaa.seed)
        block["pwi"] = pwi.to_json()
        for i, a in enumerate(alts):
            for j, b in enumerate(alts):
                if i == j:
                    continue
                win, loss = first_flip_indices(table, (a, b), samples,
                                               cfg.mode, mode_params)
                verdict = smaa_verdict(pwi, (a, b), cfg.smaa.t, win, loss)
                grid[i][j] = str(verdict.value)
                evidence[f"{a},{b}"] = verdict.evidence.to_json()
    else:
        for i, a in enumerate(alts):
            for j, b in enumerate(alts):
                if i == j:
                    continue
                verdict = _pair_verdict(table, (a, b), cfg, poly, vertices)
                grid[i][j] = str(verdict.value)
                evidence[f"{a},{b}"] = verdict.evidence.to_json()
    block["verdicts"] = grid
    block["evidence"] = evidence
    return block


def _rethreshold_block(block: dict, cfg: SessionConfig, alts) -> dict:
    """Reuse a perspective's winning indices under a new acceptance level."""
    out = json.loads(json.dumps(block))
    t = cfg.smaa.t
    pos = {a: i for i, a in enumerate(alts)}
    for key, ev in out["evidence"].items():
        pwi = parse_rational(ev["pwi"]["exact"])
        value = "T" if pwi >= t else ("F" if pwi <= 1 - t else "U")
        ev["threshold"] = number_json(t)
        a, b = key.split(",")
        out["verdicts"][pos[a]][pos[b]] = value
    return out


def run_pipeline(table: PerformanceTable, config: SessionConfig,
                 base: SessionReport | None = None) -> SessionReport:
    """Execute the full chain: polytopes, verdicts, combination, scores.

    When base is a report whose verdict stage had identical inputs, that
    stage is reused: wholesale for exact engines, and as stored winning
    indices (rethresholded) when only the SMAA acceptance level moved.
    """
    violations = validate_table(table)
    if violations:
        raise ValidationError(*violations)
    dataset_doc = table_json(table)
    alts = table.alternatives
    key = stage_key(dataset_doc, config)

    blocks = None
    if base is not None:
        base_cfg = base.config()
        if stage_key(base.doc["dataset"], base_cfg) == key:
            if config.engine != "smaa" or base_cfg.smaa.t == config.smaa.t:
                blocks = [json.loads(json.dumps(b))
                          for b in base.doc["perspectives"]]
            else:
                blocks = [_rethreshold_block(b, config, alts)
                          for b in base.doc["perspectives"]]
    if blocks is None:
        blocks = [_cold_perspective_block(table, config, p, i)
                  for i, p in enumerate(config.perspectives)]

    n = len(alts)
    seven = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            votes = [TriValue.parse(b["verdicts"][i][j]) for b in blocks]
            seven[i][j] = combine(votes)
    four = [[coarsen_to_four(v) for v in row] for row in seven]
    three = [[coarsen_to_three(v) for v in row] for row in four]

    matrix = RelationMatrix.from_rows(alts, [[str(v) for v in row]
                                             for row in seven])
    scheme = scheme_from_config(config)
    board = global_score(matrix, scheme)
    groups = rank(board)

    scheme_doc = dict(config.to_json()["scheme"])
    scheme_doc["values"] = scheme.to_json()
    doc = {
        "schema": SCHEMA,
        "version": 1,
        "based_on": None,
        "config": config.to_json(),
        "dataset": dataset_doc,
        "alternatives": list(alts),
        "criteria": list(table.criterion_ids),
        "perspectives": blocks,
        "seven": [[str(v) for v in row] for row in seven],
        "four": [[str(v) for v in row] for row in four],
        "three": [[str(v) for v in row] for row in three],
        "scheme": scheme_doc,
        "scores": {a: number_json(board.score(a)) for a in alts},
        "ranking": [list(g) for g in groups],
        "ranking_string": ranking_string(groups),
        "progress": {"state": "complete", "percent": 100},
    }
    return SessionReport(doc)


def whatif(base: SessionReport, delta: dict) -> SessionReport:
    """Re-run with a partial config applied over the base report's config.

    The base report is self-contained, so the run uses its recorded dataset;
    verdict-stage work is reused whenever the delta leaves it untouched.
    """
    if not isinstance(delta, dict):
        raise ValidationError(Violation("whatif-shape",
                                        "what-if delta must be an object"))
    cfg = base.config().merged(delta)
    table = load_dataset(base.doc["dataset"])
    report = run_pipeline(table, cfg, base=base)
    report.doc["based_on"] = base.version
    return report


class SessionStore:
    """Directory-per-session persistence.

    Root comes from the constructor, else PREFSEVEN_DATA_DIR, else
    ./prefseven-data. Report versions are append-only.
    """

    def __init__(self, root=None):
        self.root = Path(root or os.environ.get("PREFSEVEN_DATA_DIR")
                         or "./prefseven-data")
        self.root.mkdir(parents=True, exist_ok=True)
        self._lock = threading.RLock()

    @classmethod
    def at(cls, session_dir) -> tuple["SessionStore", str]:
        """Address one concrete session directory (CLI convenience)."""
        path = Path(session_dir)
        store = cls(path.parent if str(path.parent) != "" else ".")
        return store, path.name

    def _dir(self, sid: str, must_exist: bool = True) -> Path:
        d = self.root / sid
        if must_exist and not d.is_dir():
            raise SessionNotFoundError(f"no session {sid!r}")
        return d

    def create(self, sid: str | None = None) -> str:
        with self._lock:
            sid = sid or ("s-" + uuid.uuid4().hex[:12])
            d = self.root / sid
            d.mkdir(parents=True, exist_ok=True)
            return sid

    def sessions(self) -> list[str]:
        return sorted(p.name for p in self.root.iterdir() if p.is_dir())

    # -- inputs ---------------------------------------------------------------

    def set_dataset(self, sid: str, source, format: str | None = None
                    ) -> PerformanceTable:
        d = self._dir(sid)
        table = load_dataset(source, format=format)
        (d / "dataset.json").write_text(
            json.dumps(table_json(table), indent=1))
        return table

    def set_config(self, sid: str, doc: dict) -> SessionConfig:
        d = self._dir(sid)
        cfg = doc if isinstance(doc, SessionConfig) else \
            SessionConfig.from_json(doc)
        (d / "config.json").write_text(json.dumps(cfg.to_json(), indent=1))
        return cfg

    def dataset(self, sid: str) -> PerformanceTable:
        path = self._dir(sid) / "dataset.json"
        if not path.exists():
            raise SessionStateError("no-dataset", "set a dataset first")
        return load_dataset(json.loads(path.read_text()))

    def config(self, sid: str) -> SessionConfig:
        path = self._dir(sid) / "config.json"
        if not path.exists():
            raise SessionStateError("no-config", "set a config first")
        return SessionConfig.from_json(json.loads(path.read_text()))

    # -- reports --------------------------------------------------------------

    def _report_path(self, sid: str, version: int) -> Path:
        return self._dir(sid) / f"report-{version:03d}.json"

    def versions(self, sid: str) -> list[int]:
        d = self._dir(sid)
        out = []
        for p in sorted(d.glob("report-*.json")):
            try:
                out.append(int(p.stem.split("-")[1]))
            except (IndexError, ValueError):
                continue
        return sorted(out)

    def _persist(self, sid: str, report: SessionReport) -> SessionReport:
        with self._lock:
            version = (self.versions(sid) or [0])[-1] + 1
            report.doc["version"] = version
            self._report_path(sid, version).write_text(report.dumps())
        return report

    def run(self, sid: str) -> SessionReport:
        table = self.dataset(sid)
        cfg = self.config(sid)
        return self._persist(sid, run_pipeline(table, cfg))

    def report(self, sid: str, version: int | None = None) -> SessionReport:
        versions = self.versions(sid)
        if not versions:
            raise SessionStateError("not-run", "run the session first")
        if version is None:
            version = versions[-1]
        if version not in versions:
            raise SessionNotFoundError(f"no report version {version}")
        doc = json.loads(self._report_path(sid, version).read_text())
        return SessionReport.from_json(doc)

    def whatif(self, sid: str, delta: dict) -> SessionReport:
        base = self.report(sid)
        return self._persist(sid, whatif(base, delta))

    def history(self, sid: str) -> list[dict]:
        out = []
        for v in self.versions(sid):
            doc = json.loads(self._report_path(sid, v).read_text())
            out.append({
                "version": doc["version"],
                "based_on": doc.get("based_on"),
                "mode": doc["config"]["mode"],
                "engine": doc["config"]["engine"],
                "scheme": doc["config"].get("scheme", {}).get("type", "basic"),
                "ranking_string": doc["ranking_string"],
            })
        return out
