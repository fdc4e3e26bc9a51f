"""Command line interface.

Exit codes: 0 success, 2 invalid input (parse or validation), 3 infeasible
elicitation (the stated comparisons admit no weight vector).
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .explain import explain_pair, render_narrative
from .model import ValidationError, Violation
from .service.config import SessionConfig
from .service.dataset import load_dataset
from .service.report import verify_report
from .service.sessions import (InfeasibleElicitationError, SessionStateError,
                               SessionNotFoundError, SessionStore,
                               run_pipeline)

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_INFEASIBLE = 3


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="prefseven",
        description="Seven-valued preference relations over weight polytopes")
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="run the pipeline on a dataset")
    p_run.add_argument("--data", required=True, help="dataset file (csv or json)")
    p_run.add_argument("--config", required=True, help="config file (json)")
    p_run.add_argument("--out", help="write the report here (json)")
    p_run.add_argument("--session", help="also persist into this session dir")
    p_run.add_argument("--seed", type=int, help="sampling seed override")
    p_run.add_argument("--samples", type=int, help="sample count override")
    p_run.add_argument("--threshold", help="acceptance level override")

    p_explain = sub.add_parser("explain", help="explain one ordered pair")
    p_explain.add_argument("--session", required=True, help="session directory")
    p_explain.add_argument("--pair", required=True, help="pair as A,B")
    p_explain.add_argument("--version", type=int, help="report version")
    p_explain.add_argument("--json", action="store_true",
                           help="emit the full explanation document")

    p_verify = sub.add_parser("verify", help="check a report's consistency")
    p_verify.add_argument("--report", required=True, help="report file (json)")

    p_serve = sub.add_parser("serve", help="start the HTTP service")
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--port", type=int, default=8000)
    p_serve.add_argument("--data-dir", help="session storage root")
    return parser


def _apply_overrides(cfg: SessionConfig, args) -> SessionConfig:
    overrides = {}
    if args.seed is not None:
        overrides["seed"] = args.seed
    if args.samples is not None:
        overrides["samples"] = args.samples
    if args.threshold is not None:
        overrides["threshold"] = args.threshold
    if not overrides:
        return cfg
    if cfg.engine != "smaa":
        raise ValidationError(Violation(
            "override",
            f"{', '.join(sorted(overrides))} only apply to the smaa engine"))
    return cfg.merged({"smaa": overrides})


def _cmd_run(args) -> int:
    table = load_dataset(Path(args.data))
    cfg = SessionConfig.from_json(json.loads(Path(args.config).read_text()))
    cfg = _apply_overrides(cfg, args)
    if args.session:
        store, sid = SessionStore.at(args.session)
        store.create(sid)
        store.set_dataset(sid, table)
        store.set_config(sid, cfg)
        report = store.run(sid)
    else:
        report = run_pipeline(table, cfg)
    if args.out:
        Path(args.out).write_text(report.dumps())
    print(report.doc["ranking_string"])
    for alt in report.alternatives:
        entry = report.doc["scores"][alt]
        print(f"{alt}: {entry['exact']} ({entry['float']:.6g})")
    return EXIT_OK


def _cmd_explain(args) -> int:
    store, sid = SessionStore.at(args.session)
    report = store.report(sid, args.version)
    table = load_dataset(report.doc["dataset"])
    pair = tuple(p.strip() for p in args.pair.split(","))
    if len(pair) != 2 or not all(pair):
        print("--pair expects two alternative ids, e.g. S2,S3",
              file=sys.stderr)
        return EXIT_INVALID
    explanation = explain_pair(report, table, pair)
    if args.json:
        doc = explanation.to_json()
        doc["narrative"] = render_narrative(explanation)
        print(json.dumps(doc, indent=1))
    else:
        print(render_narrative(explanation))
    return EXIT_OK


def _cmd_verify(args) -> int:
    doc = json.loads(Path(args.report).read_text())
    problems = verify_report(doc)
    if not problems:
        print("report ok")
        return EXIT_OK
    for p in problems:
        where = f" [{p['where']}]" if p.get("where") else ""
        print(f"{p['code']}{where}: {p['message']}")
    return EXIT_INVALID


def _cmd_serve(args) -> int:
    import uvicorn

    from .service.api import create_app
    app = create_app(SessionStore(args.data_dir))
    uvicorn.run(app, host=args.host, port=args.port)
    return EXIT_OK


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    handlers = {"run": _cmd_run, "explain": _cmd_explain,
                "verify": _cmd_verify, "serve": _cmd_serve}
    try:
        return handlers[args.command](args)
    except InfeasibleElicitationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except (ValidationError, SessionStateError, SessionNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except json.JSONDecodeError as exc:
        print(f"error: invalid JSON: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
