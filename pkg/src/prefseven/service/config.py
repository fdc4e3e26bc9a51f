"""Session configuration: parsing, validation, canonical serialization."""
from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction

from ..model import Perspective, ValidationError, Violation, WeightVector
from ..rationals import format_rational, parse_rational
from ..scoring import CardCounts
from ..verdict import OutrankingParams

MODES = ("value", "outranking")
ENGINES = ("lp", "vertices", "smaa")
COARSENINGS = ("seven", "four", "three")

DEFAULT_SAMPLES = 100000
DEFAULT_THRESHOLD = Fraction(17, 20)


@dataclass(frozen=True)
class SmaaSettings:
    samples: int = DEFAULT_SAMPLES
    seed: int = 0
    t: Fraction = DEFAULT_THRESHOLD

    def __post_init__(self):
        if not isinstance(self.samples, int) or self.samples <= 0:
            raise ValidationError(Violation("smaa-samples",
                                            "samples must be a positive integer"))
        if not isinstance(self.seed, int):
            raise ValidationError(Violation("smaa-seed", "seed must be an integer"))
        t = parse_rational(self.t)
        if not (Fraction(1, 2) < t <= 1):
            raise ValidationError(Violation("smaa-threshold",
                                            "t must lie in (0.5, 1]"))
        object.__setattr__(self, "t", t)

    def to_json(self) -> dict:
        return {"samples": self.samples, "seed": self.seed,
                "threshold": format_rational(self.t)}


@dataclass(frozen=True)
class SessionConfig:
    mode: str = "value"
    engine: str = "lp"
    perspectives: tuple[Perspective, ...] = ()
    smaa: SmaaSettings | None = None
    outranking: OutrankingParams | None = None
    scheme_type: str = "basic"
    cards: CardCounts | None = None
    coarsening: str = "seven"

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValidationError(Violation("config-mode",
                                            f"mode must be one of {MODES}"))
        if self.engine not in ENGINES:
            raise ValidationError(Violation("config-engine",
                                            f"engine must be one of {ENGINES}"))
        if self.coarsening not in COARSENINGS:
            raise ValidationError(Violation(
                "config-coarsening", f"coarsening must be one of {COARSENINGS}"))
        if not self.perspectives:
            raise ValidationError(Violation("config-perspectives",
                                            "at least one perspective required"))
        names = [p.name for p in self.perspectives]
        if len(set(names)) != len(names):
            raise ValidationError(Violation("config-perspectives",
                                            "perspective names must be unique"))
        if self.engine == "smaa" and self.smaa is None:
            object.__setattr__(self, "smaa", SmaaSettings())
        if self.mode == "outranking" and self.outranking is None:
            raise ValidationError(Violation(
                "config-outranking", "outranking mode requires q and k"))
        if self.scheme_type not in ("basic", "deck"):
            raise ValidationError(Violation("config-scheme",
                                            "scheme must be basic or deck"))
        if self.scheme_type == "deck" and self.cards is None:
            raise ValidationError(Violation("config-scheme",
                                            "deck scheme requires card counts"))

    def to_json(self) -> dict:
        doc = {
            "mode": self.mode,
            "engine": self.engine,
            "perspectives": [_perspective_json(p) for p in self.perspectives],
            "scheme": ({"type": "basic"} if self.scheme_type == "basic"
                       else {"type": "deck", "cards": list(self.cards.as_tuple())}),
            "coarsening": self.coarsening,
        }
        if self.smaa is not None:
            doc["smaa"] = self.smaa.to_json()
        if self.outranking is not None:
            doc["outranking"] = {"q": format_rational(self.outranking.q),
                                 "k": format_rational(self.outranking.k)}
        return doc

    @classmethod
    def from_json(cls, doc: dict) -> "SessionConfig":
        if not isinstance(doc, dict):
            raise ValidationError(Violation("config-shape",
                                            "config must be a JSON object"))
        known = {"mode", "engine", "perspectives", "smaa", "outranking",
                 "scheme", "coarsening", "schema"}
        unknown = set(doc) - known
        if unknown:
            raise ValidationError(Violation(
                "config-unknown", f"unknown config fields: {sorted(unknown)}"))
        perspectives = tuple(_perspective_from_json(p)
                             for p in doc.get("perspectives", []))
        smaa = None
        if "smaa" in doc and doc["smaa"] is not None:
            s = doc["smaa"]
            if not isinstance(s, dict):
                raise ValidationError(Violation("smaa-shape",
                                                "smaa must be an object"))
            smaa = SmaaSettings(
                samples=s.get("samples", DEFAULT_SAMPLES),
                seed=s.get("seed", 0),
                t=s.get("threshold", s.get("t", DEFAULT_THRESHOLD)))
        outranking = None
        if "outranking" in doc and doc["outranking"] is not None:
            o = doc["outranking"]
            outranking = OutrankingParams(q=o.get("q", 0),
                                          k=o.get("k", Fraction(13, 20)))
        scheme = doc.get("scheme", {"type": "basic"})
        if isinstance(scheme, str):
            scheme = {"type": scheme}
        scheme_type = scheme.get("type", "basic")
        cards = None
        if scheme_type == "deck":
            raw = scheme.get("cards")
            if (not isinstance(raw, (list, tuple))) or len(raw) != 4:
                raise ValidationError(Violation(
                    "config-scheme", "deck scheme needs four card counts"))
            cards = CardCounts(*[int(x) for x in raw])
        return cls(
            mode=doc.get("mode", "value"),
            engine=doc.get("engine", "lp"),
            perspectives=perspectives,
            smaa=smaa,
            outranking=outranking,
            scheme_type=scheme_type,
            cards=cards,
            coarsening=doc.get("coarsening", "seven"),
        )

    def merged(self, delta: dict) -> "SessionConfig":
        """Apply a partial config (what-if delta) over this one."""
        base = self.to_json()
        for key, value in delta.items():
            if key == "smaa" and isinstance(value, dict) and \
                    isinstance(base.get("smaa"), dict):
                base["smaa"] = {**base["smaa"], **value}
            elif key == "outranking" and isinstance(value, dict) and \
                    isinstance(base.get("outranking"), dict):
                base["outranking"] = {**base["outranking"], **value}
            else:
                base[key] = value
        return SessionConfig.from_json(base)


def _perspective_json(p: Perspective) -> dict:
    doc = {"name": p.name, "kind": p.kind}
    if p.kind == "perturbation":
        doc["central"] = [format_rational(w) for w in p.central.values]
        doc["radius"] = format_rational(p.radius)
    else:
        doc["comparisons"] = [[a, b] for a, b in p.comparisons]
    return doc


def _perspective_from_json(doc) -> Perspective:
    if isinstance(doc, Perspective):
        return doc
    if not isinstance(doc, dict):
        raise ValidationError(Violation("perspective-shape",
                                        "perspective must be an object"))
    name = doc.get("name", "")
    if not name:
        raise ValidationError(Violation("perspective-name",
                                        "perspective needs a name"))
    kind = doc.get("kind")
    if kind == "perturbation":
        central = doc.get("central")
        if not isinstance(central, (list, tuple)) or not central:
            raise ValidationError(Violation(
                "perspective-central", f"perspective {name}: central required"))
        return Perspective.perturbation(
            name, WeightVector(tuple(central)), doc.get("radius", 0))
    if kind == "elicited":
        comps = doc.get("comparisons", [])
        if not isinstance(comps, (list, tuple)) or not comps:
            raise ValidationError(Violation(
                "perspective-comparisons",
                f"perspective {name}: at least one comparison required"))
        pairs = []
        for c in comps:
            if not isinstance(c, (list, tuple)) or len(c) != 2:
                raise ValidationError(Violation(
                    "perspective-comparisons",
                    f"perspective {name}: comparisons are [better, worse] pairs"))
            pairs.append((str(c[0]), str(c[1])))
        return Perspective.elicited(name, pairs)
    raise ValidationError(Violation(
        "perspective-kind",
        f"perspective {name}: kind must be perturbation or elicited"))
