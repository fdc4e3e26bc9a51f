"""Estimator facade: the full pipeline behind a fit/transform surface.

SevenValuedRanking wraps run_pipeline so the engine can sit in sklearn
tooling (grid search over schemes, pipelines that consume the scores). X is
a performance table in any accepted form; there is no y.
"""
from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator

from .model import PerformanceTable, ValidationError, Violation
from .service.config import SessionConfig, SmaaSettings
from .service.dataset import load_dataset
from .service.sessions import run_pipeline


def _as_table(X) -> PerformanceTable:
    if isinstance(X, PerformanceTable):
        return X
    if isinstance(X, (dict, str)):
        return load_dataset(X)
    arr = np.asarray(X, dtype=object)
    if arr.ndim != 2:
        raise ValidationError(Violation(
            "fit-input", "X must be a table, a dataset document, or a 2d "
                         "array of grades"))
    n, m = arr.shape
    return load_dataset({
        "criteria": [f"c{j + 1}" for j in range(m)],
        "alternatives": [f"a{i + 1}" for i in range(n)],
        "grades": [[arr[i, j] for j in range(m)] for i in range(n)],
    })


class SevenValuedRanking(BaseEstimator):
    """Rank alternatives by robust pairwise comparison under many weightings.

    Parameters mirror the session config: perspectives (list of perspective
    dicts or Perspective objects), mode ("value" or "outranking"), engine
    ("lp", "vertices" or "smaa"), q/k for outranking, scheme ("basic" or
    "deck") with cards, and samples/seed/threshold for the sampling engine.

    After fit: report_ (full report document), matrix_ (seven-valued grid),
    scores_ (dict alternative -> Fraction), ranking_ (tie groups) and
    ranking_string_.
    """

    def __init__(self, perspectives=None, mode="value", engine="lp",
                 q=0, k="13/20", scheme="basic", cards=None,
                 samples=100000, seed=0, threshold="17/20",
                 coarsening="seven"):
        self.perspectives = perspectives
        self.mode = mode
        self.engine = engine
        self.q = q
        self.k = k
        self.scheme = scheme
        self.cards = cards
        self.samples = samples
        self.seed = seed
        self.threshold = threshold
        self.coarsening = coarsening

    def _config(self) -> SessionConfig:
        if not self.perspectives:
            raise ValidationError(Violation(
                "config-perspectives", "perspectives must be provided"))
        doc = {
            "mode": self.mode,
            "engine": self.engine,
            "perspectives": list(self.perspectives),
            "scheme": ({"type": "deck", "cards": list(self.cards)}
                       if self.scheme == "deck" else {"type": self.scheme}),
            "coarsening": self.coarsening,
        }
        if self.mode == "outranking":
            doc["outranking"] = {"q": self.q, "k": self.k}
        if self.engine == "smaa":
            doc["smaa"] = {"samples": self.samples, "seed": self.seed,
                           "threshold": self.threshold}
        return SessionConfig.from_json(doc)

    def fit(self, X, y=None):
        table = _as_table(X)
        report = run_pipeline(table, self._config())
        self.table_ = table
        self.alternatives_ = tuple(table.alternatives)
        self.report_ = report.to_json()
        self.matrix_ = report.seven_matrix()
        board = report.scores()
        self.scores_ = {a: board.score(a) for a in self.alternatives_}
        self.ranking_ = [tuple(g) for g in report.doc["ranking"]]
        self.ranking_string_ = report.doc["ranking_string"]
        return self

    def _check_fitted(self):
        if not hasattr(self, "report_"):
            raise ValidationError(Violation("not-fitted",
                                            "call fit before this method"))

    def transform(self, X=None):
        """Column vector of global scores for the fitted alternatives."""
        self._check_fitted()
        return np.array([[float(self.scores_[a])]
                         for a in self.alternatives_])

    def fit_transform(self, X, y=None):
        return self.fit(X).transform()

    def predict(self, X=None):
        """Rank group index per fitted alternative, 0 for the top group."""
        self._check_fitted()
        position = {}
        for g, group in enumerate(self.ranking_):
            for a in group:
                position[a] = g
        return np.array([position[a] for a in self.alternatives_])
