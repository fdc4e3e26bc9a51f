import copy
import json
from fractions import Fraction

import pytest

from prefseven.model import ValidationError
from prefseven.service.config import SessionConfig, SmaaSettings
from prefseven.service.dataset import load_dataset, table_json
from prefseven.service.report import SessionReport, stage_key, verify_report
from prefseven.service.sessions import (InfeasibleElicitationError,
                                        SessionNotFoundError,
                                        SessionStateError, SessionStore,
                                        run_pipeline, whatif)

F = Fraction

BASE_CONFIG = {
    "mode": "value",
    "engine": "lp",
    "perspectives": [
        {"name": "egalitarian", "kind": "perturbation",
         "central": ["1/4", "1/4", "1/4", "1/4"], "radius": "3/20"},
    ],
}


# -- config ------------------------------------------------------------------

def test_config_round_trip():
    cfg = SessionConfig.from_json(BASE_CONFIG)
    again = SessionConfig.from_json(cfg.to_json())
    assert cfg == again
    assert cfg.mode == "value"
    assert cfg.engine == "lp"


def test_config_rejects_unknown_engine_and_mode():
    with pytest.raises(ValidationError):
        SessionConfig.from_json({**BASE_CONFIG, "engine": "quantum"})
    with pytest.raises(ValidationError):
        SessionConfig.from_json({**BASE_CONFIG, "mode": "vibes"})


def test_config_rejects_unknown_top_level_key():
    with pytest.raises(ValidationError):
        SessionConfig.from_json({**BASE_CONFIG, "extra": 1})


def test_config_requires_perspectives_with_unique_names():
    with pytest.raises(ValidationError):
        SessionConfig.from_json({**BASE_CONFIG, "perspectives": []})
    dup = {**BASE_CONFIG,
           "perspectives": BASE_CONFIG["perspectives"] * 2}
    with pytest.raises(ValidationError):
        SessionConfig.from_json(dup)


def test_config_outranking_requires_params():
    with pytest.raises(ValidationError):
        SessionConfig.from_json({**BASE_CONFIG, "mode": "outranking"})
    ok = SessionConfig.from_json({**BASE_CONFIG, "mode": "outranking",
                                  "outranking": {"q": "1", "k": "13/20"}})
    assert ok.outranking.q == 1


def test_config_smaa_defaults_and_validation():
    cfg = SessionConfig.from_json({**BASE_CONFIG, "engine": "smaa"})
    assert cfg.smaa.samples == 100000
    assert cfg.smaa.t == F(17, 20)
    with pytest.raises(ValidationError):
        SmaaSettings(samples=0, seed=0, t=F(17, 20))
    with pytest.raises(ValidationError):
        SmaaSettings(samples=10, seed=0, t=F(1, 2))
    with pytest.raises(ValidationError):
        SmaaSettings(samples=10, seed=0, t=F(21, 20))
    assert SmaaSettings(samples=10, seed=0, t=F(1)).t == 1


def test_config_deck_scheme_requires_cards():
    with pytest.raises(ValidationError):
        SessionConfig.from_json({**BASE_CONFIG, "scheme": {"type": "deck"}})
    cfg = SessionConfig.from_json(
        {**BASE_CONFIG, "scheme": {"type": "deck", "cards": [6, 5, 3, 2]}})
    assert cfg.cards.as_tuple() == (6, 5, 3, 2)


def test_config_merged_deep_merges_subobjects():
    cfg = SessionConfig.from_json({**BASE_CONFIG, "engine": "smaa",
                                   "smaa": {"samples": 5000, "seed": 3}})
    merged = cfg.merged({"smaa": {"threshold": "19/20"}})
    assert merged.smaa.samples == 5000
    assert merged.smaa.seed == 3
    assert merged.smaa.t == F(19, 20)
    # the original is untouched
    assert cfg.smaa.t == F(17, 20)


# -- datasets ------------------------------------------------------------------

def test_load_dataset_csv_with_position_info(tmp_path):
    good = "alternative,c1,c2\nA,1,2\nB,3,4\n"
    table = load_dataset(good, format="csv")
    assert table.alternatives == ("A", "B")
    bad = "alternative,c1,c2\nA,1,x\n"
    with pytest.raises(ValidationError) as err:
        load_dataset(bad, format="csv")
    v = err.value.violations[0]
    assert "not a number" in v.message
    assert v.where["line"] == 2
    assert v.where["column"] == 3


def test_load_dataset_autodetects_json():
    doc = {"criteria": ["c1"], "alternatives": ["A"], "grades": [[5]]}
    table = load_dataset(json.dumps(doc))
    assert table.value("A", "c1") == 5


def test_load_dataset_from_path(tmp_path):
    p = tmp_path / "data.csv"
    p.write_text("alternative,c1\nA,1\nB,2\n")
    table = load_dataset(p)
    assert table.alternatives == ("A", "B")


def test_load_dataset_json_requires_keys():
    with pytest.raises(ValidationError):
        load_dataset(json.dumps({"criteria": ["c1"]}))


def test_table_json_round_trip(students):
    doc = table_json(students)
    again = load_dataset(doc)
    assert again == students


# -- pipeline determinism and stage reuse ---------------------------------------

def test_run_pipeline_is_deterministic(students, value_smaa_config):
    a = run_pipeline(students, value_smaa_config)
    b = run_pipeline(students, value_smaa_config)
    assert a.dumps() == b.dumps()


def test_stage_key_ignores_threshold(students, value_smaa_config):
    doc = table_json(students)
    base = stage_key(doc, value_smaa_config)
    moved = stage_key(doc, value_smaa_config.merged({"smaa": {"threshold": "9/10"}}))
    assert base == moved
    other = stage_key(doc, value_smaa_config.merged({"smaa": {"seed": 9}}))
    assert base != other


def test_whatif_reuses_verdicts_for_scheme_change(students, report_value, expected):
    rep2 = whatif(report_value, {"scheme": {"type": "deck", "cards": [6, 5, 3, 2]}})
    assert rep2.doc["based_on"] == report_value.doc["version"]
    assert rep2.doc["seven"] == report_value.doc["seven"]
    got = [rep2.doc["scores"][a]["exact"] for a in rep2.doc["alternatives"]]
    assert got == expected["scores"]["value"]["deck"]
    # evidence blocks are carried over verbatim
    assert rep2.doc["perspectives"] == report_value.doc["perspectives"]


def test_whatif_rethresholds_smaa_without_resampling(students, report_value_smaa):
    rep2 = whatif(report_value_smaa, {"smaa": {"threshold": "99/100"}})
    for p_old, p_new in zip(report_value_smaa.doc["perspectives"],
                            rep2.doc["perspectives"]):
        assert p_old["pwi"] == p_new["pwi"]
    # thresholds recorded in evidence moved
    ev = rep2.doc["perspectives"][0]["evidence"]["S1,S2"]
    assert ev["threshold"]["exact"] == "99/100"
    # a run this strict turns former certainties into unknowns somewhere
    assert rep2.doc["seven"] != report_value_smaa.doc["seven"]


def test_whatif_cold_runs_on_engine_change(students, report_value, expected):
    rep2 = whatif(report_value, {"engine": "vertices"})
    assert rep2.doc["seven"] == expected["seven"]["value"]
    assert rep2.doc["perspectives"][0]["vertices"] is not None


def test_verify_report_accepts_honest_and_flags_tampered(report_value):
    doc = json.loads(report_value.dumps())
    assert verify_report(doc) == []
    bad = copy.deepcopy(doc)
    bad["scores"]["S1"] = {"exact": "99", "float": 99.0}
    problems = verify_report(bad)
    assert problems
    assert any("score" in p["code"] for p in problems)
    bad2 = copy.deepcopy(doc)
    bad2["seven"][0][1] = "T"
    assert verify_report(bad2)


def test_verify_report_checks_ranking(report_value):
    doc = json.loads(report_value.dumps())
    doc["ranking_string"] = "S1 -> S2 -> S3 -> S4 -> S5"
    assert any("ranking" in p["code"] for p in verify_report(doc))


# -- session store ---------------------------------------------------------------

def _store(tmp_path):
    return SessionStore(root=tmp_path / "store")


def test_store_lifecycle(tmp_path, students, value_lp_config):
    store = _store(tmp_path)
    sid = store.create()
    assert sid in store.sessions()
    with pytest.raises(SessionStateError) as err:
        store.run(sid)
    assert err.value.code == "no-dataset"
    store.set_dataset(sid, students)
    with pytest.raises(SessionStateError) as err:
        store.run(sid)
    assert err.value.code == "no-config"
    store.set_config(sid, value_lp_config)
    with pytest.raises(SessionStateError) as err:
        store.report(sid)
    assert err.value.code == "not-run"
    rep = store.run(sid)
    assert rep.doc["version"] == 1
    assert store.report(sid).doc == rep.doc
    rep2 = store.run(sid)
    assert rep2.doc["version"] == 2
    assert store.versions(sid) == [1, 2]
    assert store.report(sid, version=1).doc["version"] == 1
    with pytest.raises(SessionNotFoundError):
        store.report(sid, version=99)
    with pytest.raises(SessionNotFoundError):
        store.report("missing-session")


def test_store_whatif_appends_version_and_keeps_config(tmp_path, students,
                                                       value_lp_config):
    store = _store(tmp_path)
    sid = store.create()
    store.set_dataset(sid, students)
    store.set_config(sid, value_lp_config)
    store.run(sid)
    rep = store.whatif(sid, {"scheme": {"type": "deck", "cards": [6, 5, 3, 2]}})
    assert rep.doc["version"] == 2
    assert rep.doc["based_on"] == 1
    # the stored session config is not mutated by a what-if
    assert store.config(sid).scheme_type == "basic"
    hist = store.history(sid)
    assert [h["version"] for h in hist] == [1, 2]
    assert hist[1]["based_on"] == 1


def test_store_persists_across_instances(tmp_path, students, value_lp_config):
    store = _store(tmp_path)
    sid = store.create()
    store.set_dataset(sid, students)
    store.set_config(sid, value_lp_config)
    store.run(sid)
    reopened = SessionStore(root=tmp_path / "store")
    assert sid in reopened.sessions()
    assert reopened.report(sid).doc["version"] == 1


def test_infeasible_elicitation_names_conflicts(tmp_path):
    table = load_dataset({
        "criteria": ["c1", "c2", "c3", "c4"],
        "alternatives": ["A", "B", "C", "D"],
        "grades": [[40, 10, 10, 10], [30, 40, 40, 40],
                   [10, 40, 10, 10], [40, 30, 40, 40]],
    })
    cfg = SessionConfig.from_json({
        "mode": "value", "engine": "lp",
        "perspectives": [{"name": "panel", "kind": "elicited",
                          "comparisons": [["A", "B"], ["C", "D"]]}],
    })
    with pytest.raises(InfeasibleElicitationError) as err:
        run_pipeline(table, cfg)
    assert err.value.perspective == "panel"
    assert err.value.conflicts
    assert "panel" in str(err.value)


def test_report_json_round_trip(report_value):
    doc = json.loads(report_value.dumps())
    rep = SessionReport.from_json(doc)
    assert rep.doc == report_value.doc
    with pytest.raises(ValidationError):
        SessionReport.from_json({"schema": "other/9"})
