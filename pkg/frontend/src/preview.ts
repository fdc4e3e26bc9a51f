/** Client-side previews.
 *
 * The UI never computes verdicts or scores authoritatively; the only
 * local arithmetic allowed is what makes drafts responsive before a
 * round trip, and each result is tagged `preview: true`:
 *
 *  - rethresholding stored winning indices while the t slider moves,
 *  - the coarsening recolor (a pure label map),
 *  - deck card counts to the value levels they imply.
 *
 * All three are exact-rational mirrors of the service rules, so a
 * preview and the authoritative re-run can only differ if the server
 * recomputed something the preview could not know (engine or sampling
 * changes). Tests pin the agreement against recorded re-runs.
 */

import { ONE, Rat, add, cmp, parseRat, rat, ratFloat, ratStr } from "./rational.js";
import type {
  FourLabel,
  ReportDoc,
  SevenLabel,
  ThreeLabel,
  TriLabel,
} from "./types.js";

/** Threshold rule: T iff pwi >= t, F iff pwi <= 1 - t, else U. */
export function triFromPwi(pwiExact: string, t: Rat): TriLabel {
  const p = parseRat(pwiExact);
  if (cmp(p, t) >= 0) return "T";
  if (cmp(add(p, t), ONE) <= 0) return "F";
  return "U";
}

/** Count rule combining one tri verdict per perspective. */
export function combine(verdicts: TriLabel[]): SevenLabel {
  if (verdicts.length === 0) throw new Error("no verdicts to combine");
  const someT = verdicts.includes("T");
  const someF = verdicts.includes("F");
  const someU = verdicts.includes("U");
  // K is the clean two-sided contradiction; fK the fully mixed one
  if (someT && someF) return someU ? "fK" : "K";
  if (someT) return someU ? "sT" : "T";
  if (someF) return someU ? "sF" : "F";
  return "U";
}

export const COARSEN_FOUR: Record<SevenLabel, FourLabel> = {
  T: "T4",
  sT: "T4",
  U: "U4",
  K: "K4",
  fK: "K4",
  sF: "F4",
  F: "F4",
};

export const COARSEN_THREE: Record<FourLabel, ThreeLabel> = {
  T4: "T3",
  U4: "Other3",
  K4: "Other3",
  F4: "F3",
};

export interface RethresholdPreview {
  preview: true;
  threshold: string;
  /** per-perspective tri grids in report perspective order */
  verdicts: TriLabel[][][];
  seven: SevenLabel[][];
}

/**
 * Re-derive the matrix from a report's stored winning indices at a new
 * acceptance level. Only valid for smaa reports (others carry no pwi).
 */
export function rethresholdPreview(report: ReportDoc, threshold: string): RethresholdPreview {
  const t = parseRat(threshold);
  const alts = report.alternatives;
  const perPerspective: TriLabel[][][] = report.perspectives.map((block) => {
    if (!block.pwi) {
      throw new Error(`perspective ${block.name} has no winning indices`);
    }
    const indices = block.pwi.indices;
    return alts.map((a) =>
      alts.map((b) => {
        const cell = indices[`${a},${b}`];
        if (!cell) throw new Error(`missing index for ${a},${b}`);
        return triFromPwi(cell.exact, t);
      }),
    );
  });
  const seven = alts.map((_, i) =>
    alts.map((_, j) => combine(perPerspective.map((grid) => grid[i]![j]!))),
  );
  return { preview: true, threshold, verdicts: perPerspective, seven };
}

export interface DeckPreview {
  preview: true;
  cards: [number, number, number, number];
  /** normalized level ladder from F up to T: [F, sF, mid, sT, T] */
  levels: [string, string, string, string, string];
  scheme: { v_T: string; v_sT: string; v_sF: string; v_F: string };
  floats: number[];
}

/**
 * Card counts in the four gaps (F..sF, sF..mid, mid..sT, sT..T) to the
 * normalized value levels they imply; zero cards everywhere previews
 * the basic scheme.
 */
export function deckPreview(cards: [number, number, number, number]): DeckPreview {
  for (const c of cards) {
    if (!Number.isInteger(c) || c < 0) {
      throw new Error(`card counts must be nonnegative integers, got ${c}`);
    }
  }
  const [fToSF, sFToMid, midToST, sTToT] = cards;
  const nuST = midToST + 1;
  const nuT = nuST + sTToT + 1;
  const nuSF = sFToMid + 1;
  const nuF = nuSF + fToSF + 1;
  const mx = Math.max(nuT, nuF);
  const level = (nu: number): Rat => rat(BigInt(nu), BigInt(mx));
  const ladder: Rat[] = [level(nuF), level(nuSF), rat(0n), level(nuST), level(nuT)];
  return {
    preview: true,
    cards,
    levels: ladder.map(ratStr) as DeckPreview["levels"],
    scheme: {
      v_T: ratStr(level(nuT)),
      v_sT: ratStr(level(nuST)),
      v_sF: ratStr(level(nuSF)),
      v_F: ratStr(level(nuF)),
    },
    floats: ladder.map(ratFloat),
  };
}
