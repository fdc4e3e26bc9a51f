"""Pair explanations: per-perspective evidence tables, flip witnesses and a
deterministic plain-text narrative, all reconstructed from a stored report."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .model import (PerformanceTable, ValidationError, Violation, WeightVector,
                    utility)
from .rationals import format_rational, number_json, parse_rational, vector_json
from .scoring import GainLossScheme
from .sevenlogic import SevenValue, TriValue, coarsen_to_four, coarsen_to_three
from .verdict import concordance

_SEVEN_PHRASE = {
    SevenValue.TRUE: "accepted in every perspective",
    SevenValue.SOMETIMES_TRUE:
        "accepted in at least one perspective and never rejected",
    SevenValue.UNKNOWN: "undecided in every perspective",
    SevenValue.CONTRADICTORY:
        "accepted in some perspectives and rejected in others, none undecided",
    SevenValue.FULLY_CONTRADICTORY:
        "accepted, rejected and undecided across perspectives",
    SevenValue.SOMETIMES_FALSE:
        "rejected in at least one perspective and never accepted",
    SevenValue.FALSE: "rejected in every perspective",
}

_TRI_WORD = {TriValue.TRUE: "accepted", TriValue.FALSE: "rejected",
             TriValue.UNKNOWN: "undecided"}


@dataclass(frozen=True)
class PerspectiveTrace:
    """One perspective's contribution to a pair verdict."""

    name: str
    kind: str
    engine: str
    verdict: TriValue
    detail: dict
    rows: tuple[dict, ...]
    flip: dict | None

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "kind": self.kind,
            "engine": self.engine,
            "verdict": str(self.verdict),
            "detail": self.detail,
            "rows": list(self.rows),
            "flip": self.flip,
        }


@dataclass(frozen=True)
class Explanation:
    pair: tuple[str, str]
    mode: str
    seven: SevenValue
    traces: tuple[PerspectiveTrace, ...]
    cell_gain: Fraction
    cell_loss: Fraction

    def to_json(self) -> dict:
        four = coarsen_to_four(self.seven)
        return {
            "pair": list(self.pair),
            "mode": self.mode,
            "seven": str(self.seven),
            "four": str(four),
            "three": str(coarsen_to_three(four)),
            "perspectives": [t.to_json() for t in self.traces],
            "cell_gain": number_json(self.cell_gain),
            "cell_loss": number_json(self.cell_loss),
        }


def _doc(report) -> dict:
    return report.doc if hasattr(report, "doc") else report


def _weights_of(vecjson) -> WeightVector:
    return WeightVector(tuple(parse_rational(x) for x in vecjson["exact"]))


def _value_row(label, table, pair, w: WeightVector) -> dict:
    a, b = pair
    ua = utility(table, a, w)
    ub = utility(table, b, w)
    return {"label": label, "weights": vector_json(w.values),
            "left": number_json(ua), "right": number_json(ub),
            "difference": number_json(ua - ub), "holds": ua >= ub}


def _outranking_row(label, table, pair, w: WeightVector, q, k) -> dict:
    c = concordance(table, pair, w, q)
    return {"label": label, "weights": vector_json(w.values),
            "concordance": number_json(c), "level": number_json(k),
            "holds": c >= k}


def _make_row(label, table, pair, w, mode, params):
    if mode == "outranking":
        return _outranking_row(label, table, pair, w,
                               params["q"], params["k"])
    return _value_row(label, table, pair, w)


def _params_of(cfg: dict):
    if cfg["mode"] != "outranking":
        return None
    o = cfg["outranking"]
    return {"q": parse_rational(o["q"]), "k": parse_rational(o["k"])}


def _trace(block: dict, cfg: dict, table, pair,
           perspective_cfg: dict) -> PerspectiveTrace:
    mode = cfg["mode"]
    engine = cfg["engine"]
    params = _params_of(cfg)
    a, b = pair
    alts = list(table.alternatives)
    i, j = alts.index(a), alts.index(b)
    verdict = TriValue.parse(block["verdicts"][i][j])
    detail = dict(block["evidence"][f"{a},{b}"])
    rows: list[dict] = []
    flip = None

    if engine == "lp":
        lo = _weights_of(detail["argmin"])
        hi = _weights_of(detail["argmax"])
        rows.append(_make_row("minimizer", table, pair, lo, mode, params))
        rows.append(_make_row("maximizer", table, pair, hi, mode, params))
        if verdict is TriValue.UNKNOWN:
            flip = {"win": rows[1], "lose": rows[0]}
    elif engine == "vertices":
        if perspective_cfg.get("kind") == "perturbation":
            central = WeightVector(tuple(parse_rational(x)
                                         for x in perspective_cfg["central"]))
            rows.append(_make_row("central", table, pair, central, mode,
                                  params))
        for idx, vec in enumerate(block.get("vertices") or []):
            rows.append(_make_row(f"vertex {idx}", table, pair,
                                  _weights_of(vec), mode, params))
        if verdict is TriValue.UNKNOWN:
            sup = detail.get("supporting", [])
            opp = detail.get("opposing", [])
            offset = 1 if perspective_cfg.get("kind") == "perturbation" else 0
            flip = {"win": rows[offset + sup[0]] if sup else None,
                    "lose": rows[offset + opp[0]] if opp else None}
    elif engine == "smaa":
        if verdict is TriValue.UNKNOWN:
            flip = {"win_index": detail.get("win_index"),
                    "loss_index": detail.get("loss_index"),
                    "note": "sample positions under the recorded seed"}
    return PerspectiveTrace(name=block["name"], kind=block["kind"],
                            engine=engine, verdict=verdict, detail=detail,
                            rows=tuple(rows), flip=flip)


def _diagonal_trace(block: dict, cfg: dict) -> PerspectiveTrace:
    mode = cfg["mode"]
    note = ("an alternative always outranks itself"
            if mode == "outranking"
            else "an alternative is always at least as good as itself")
    return PerspectiveTrace(
        name=block["name"], kind=block["kind"], engine=cfg["engine"],
        verdict=TriValue.TRUE, detail={"note": note}, rows=(), flip=None)


def explain_pair(report, table: PerformanceTable, pair) -> Explanation:
    """Rebuild the reasoning for one ordered pair from a report document."""
    doc = _doc(report)
    a, b = pair
    alts = list(doc["alternatives"])
    for x in (a, b):
        if x not in alts:
            raise ValidationError(Violation("unknown-alternative",
                                            f"unknown alternative {x!r}", x))
    cfg = doc["config"]
    seven = SevenValue.parse(doc["seven"][alts.index(a)][alts.index(b)])
    pcfgs = {p["name"]: p for p in cfg["perspectives"]}
    traces = []
    for block in doc["perspectives"]:
        pcfg = pcfgs.get(block["name"], {})
        if a == b:
            traces.append(_diagonal_trace(block, cfg))
        else:
            traces.append(_trace(block, cfg, table, (a, b), pcfg))

    values = doc["scheme"]["values"]
    scheme = GainLossScheme(
        v_T=parse_rational(values["v_T"]["exact"]),
        v_sT=parse_rational(values["v_sT"]["exact"]),
        v_sF=parse_rational(values["v_sF"]["exact"]),
        v_F=parse_rational(values["v_F"]["exact"]))
    return Explanation(pair=(a, b), mode=cfg["mode"], seven=seven,
                       traces=tuple(traces),
                       cell_gain=scheme.gain(seven),
                       cell_loss=scheme.loss(seven))


def _show(x) -> str:
    x = parse_rational(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{format_rational(x)} ({float(x):.6g})"


def _num(detail_entry) -> Fraction:
    return parse_rational(detail_entry["exact"])


def _weights_str(row: dict) -> str:
    return "(" + ", ".join(format_rational(parse_rational(x))
                           for x in row["weights"]["exact"]) + ")"


def _trace_line(t: PerspectiveTrace, pair, mode: str) -> str:
    a, b = pair
    head = f"  {t.name} ({t.kind}, {t.engine}): {_TRI_WORD[t.verdict]}."
    if t.detail.get("note"):
        return f"{head} {t.detail['note'].capitalize()}."
    if t.engine == "lp":
        lo, hi = _num(t.detail["min"]), _num(t.detail["max"])
        quantity = (f"C({a},{b}) - k" if mode == "outranking"
                    else f"U({a}) - U({b})")
        body = f" {quantity} spans [{_show(lo)}, {_show(hi)}]."
    elif t.engine == "vertices":
        sup = len(t.detail.get("supporting", []))
        tot = len(t.detail.get("values", []))
        body = f" The claim holds at {sup} of {tot} vertices."
    else:
        pwi = _num(t.detail["pwi"])
        thr = _num(t.detail["threshold"])
        body = (f" Estimated win rate {_show(pwi)} against acceptance level "
                f"{_show(thr)} (rejection below {_show(1 - thr)}), "
                f"{t.detail['samples']} draws.")
    line = head + body
    if t.flip and t.engine in ("lp", "vertices"):
        win, lose = t.flip.get("win"), t.flip.get("lose")
        if win and lose:
            line += (f" Wins at w = {_weights_str(win)}, "
                     f"loses at w = {_weights_str(lose)}.")
    elif t.flip and t.engine == "smaa":
        line += (f" First winning draw #{t.flip['win_index']}, "
                 f"first losing draw #{t.flip['loss_index']}.")
    return line


def render_narrative(explanation: Explanation) -> str:
    """Stable, human-readable account of one pair's verdict."""
    a, b = explanation.pair
    claim = (f"{a} outranks {b}" if explanation.mode == "outranking"
             else f"{a} is at least as good as {b}")
    lines = [f"Pair ({a}, {b}): {explanation.seven} - the claim "
             f"\"{claim}\" is {_SEVEN_PHRASE[explanation.seven]}."]
    for t in explanation.traces:
        lines.append(_trace_line(t, explanation.pair, explanation.mode))
    counts = {TriValue.TRUE: 0, TriValue.UNKNOWN: 0, TriValue.FALSE: 0}
    for t in explanation.traces:
        counts[t.verdict] += 1
    lines.append(
        f"  Tally: {counts[TriValue.TRUE]} accepted, "
        f"{counts[TriValue.UNKNOWN]} undecided, "
        f"{counts[TriValue.FALSE]} rejected -> {explanation.seven}.")
    net = explanation.cell_gain - explanation.cell_loss
    lines.append(
        f"Score effect: this cell moves {a}'s global score by {_show(net)} "
        f"and {b}'s by {_show(-net)}.")
    return "\n".join(lines)
