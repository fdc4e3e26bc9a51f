"""Record workbench test fixtures from a live service instance.

Starts `prefseven serve` on a scratch port, replays the bundled session
through the HTTP API only, and freezes the responses under
test/fixtures/. Run from anywhere:

    python3 frontend/scripts/record_fixtures.py

The recorded set:
  report_value_lp.json     bundled dataset + bundled value config, v1
  pair_S2_S4.json          explanation drawer payload for that report
  report_value_smaa.json   bundled sampling config, v1 (pwi included)
  rerun_t_99_100.json      authoritative what-if at t = 99/100
  rerun_t_3_4.json         authoritative what-if at t = 3/4
  rerun_t_11_20.json       authoritative what-if at t = 11/20
  history_value_smaa.json  version list after the three what-ifs
  infeasible_conflict.json status + problem+json body of a rejected run
"""
import json
import socket
import subprocess
import sys
import tempfile
import time
import urllib.error
import urllib.request
from pathlib import Path

HERE = Path(__file__).resolve().parent
FIXTURES = HERE.parent / "test" / "fixtures"
PKG_DATA = HERE.parent.parent / "src" / "prefseven" / "data"

RERUN_THRESHOLDS = [("99/100", "rerun_t_99_100.json"),
                    ("3/4", "rerun_t_3_4.json"),
                    ("11/20", "rerun_t_11_20.json")]

CONFLICT_DATASET = {
    "criteria": ["c1", "c2", "c3", "c4"],
    "alternatives": ["A", "B", "C", "D"],
    "grades": [[40, 10, 10, 10], [30, 40, 40, 40],
               [10, 40, 10, 10], [40, 30, 40, 40]],
}
CONFLICT_CONFIG = {
    "mode": "value", "engine": "lp",
    "perspectives": [{"name": "panel", "kind": "elicited",
                      "comparisons": [["A", "B"], ["C", "D"]]}],
}


def call(base, method, path, body=None):
    data = None if body is None else json.dumps(body).encode()
    req = urllib.request.Request(base + path, data=data, method=method)
    if data is not None:
        req.add_header("content-type", "application/json")
    try:
        with urllib.request.urlopen(req) as res:
            return res.status, dict(res.headers), json.load(res)
    except urllib.error.HTTPError as err:
        return err.code, dict(err.headers), json.load(err)


def wait_ready(base, deadline=30.0):
    end = time.time() + deadline
    while time.time() < end:
        try:
            status, _, _ = call(base, "GET", "/sessions")
            if status == 200:
                return
        except OSError:
            time.sleep(0.2)
    raise RuntimeError("service did not come up")


def free_port():
    with socket.socket() as s:
        s.bind(("127.0.0.1", 0))
        return s.getsockname()[1]


def main():
    FIXTURES.mkdir(parents=True, exist_ok=True)
    csv_text = (PKG_DATA / "students.csv").read_text()
    value_cfg = json.loads((PKG_DATA / "config_value_lp.json").read_text())
    smaa_cfg = json.loads((PKG_DATA / "config_value_smaa.json").read_text())

    port = free_port()
    base = f"http://127.0.0.1:{port}"
    with tempfile.TemporaryDirectory() as scratch:
        server = subprocess.Popen(
            ["prefseven", "serve", "--port", str(port), "--data-dir", scratch],
            stdout=subprocess.DEVNULL, stderr=subprocess.DEVNULL)
        try:
            wait_ready(base)

            def session_with(config):
                _, _, created = call(base, "POST", "/sessions")
                sid = created["id"]
                status, _, _ = call(base, "PUT", f"/sessions/{sid}/dataset",
                                    {"format": "csv", "content": csv_text})
                assert status == 200, status
                status, _, _ = call(base, "PUT", f"/sessions/{sid}/config", config)
                assert status == 200, status
                status, _, _ = call(base, "POST", f"/sessions/{sid}/run")
                assert status == 200, status
                _, _, report = call(base, "GET", f"/sessions/{sid}/report")
                return sid, report

            sid_lp, report_lp = session_with(value_cfg)
            write("report_value_lp.json", report_lp)
            _, _, pair = call(base, "GET", f"/sessions/{sid_lp}/pairs/S2/S4")
            write("pair_S2_S4.json", pair)

            sid_smaa, report_smaa = session_with(smaa_cfg)
            write("report_value_smaa.json", report_smaa)
            for threshold, name in RERUN_THRESHOLDS:
                status, _, rerun = call(base, "POST", f"/sessions/{sid_smaa}/whatif",
                                        {"smaa": {"threshold": threshold}})
                assert status == 200, (threshold, status)
                write(name, rerun)
            _, _, history = call(base, "GET", f"/sessions/{sid_smaa}/history")
            write("history_value_smaa.json", history)

            _, _, created = call(base, "POST", "/sessions")
            sid_bad = created["id"]
            call(base, "PUT", f"/sessions/{sid_bad}/dataset",
                 {"format": "json", "content": CONFLICT_DATASET})
            call(base, "PUT", f"/sessions/{sid_bad}/config", CONFLICT_CONFIG)
            status, headers, body = call(base, "POST", f"/sessions/{sid_bad}/run")
            assert status == 409, status
            write("infeasible_conflict.json", {
                "status": status,
                "content_type": headers.get("content-type", ""),
                "body": body,
            })
        finally:
            server.terminate()
            server.wait(timeout=10)
    print(f"fixtures written to {FIXTURES}")


def write(name, doc):
    path = FIXTURES / name
    path.write_text(json.dumps(doc, indent=1, sort_keys=True) + "\n")
    print(f"  {name}: {path.stat().st_size} bytes")


if __name__ == "__main__":
    sys.exit(main())
