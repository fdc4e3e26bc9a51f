/** Elicitation panels: deck card counts and pairwise comparisons.
 *
 * Panels build config deltas for POST /whatif; nothing is applied
 * locally. When the service rejects an elicitation as infeasible, the
 * problem payload names the perspective and the conflicting
 * comparisons, and that is surfaced inline next to the draft.
 */

import { ProblemError } from "./api.js";
import { DeckPreview, deckPreview } from "./preview.js";
import type { ProblemDoc } from "./types.js";

export interface CardDraft {
  cards: [number, number, number, number];
}

export interface ComparisonDraft {
  perspective: string;
  /** each entry reads "first is at least as good as second" */
  comparisons: Array<[string, string]>;
}

/** Live panel numbers shown before submit. */
export function previewCardDraft(draft: CardDraft): DeckPreview {
  return deckPreview(draft.cards);
}

export function schemeDelta(draft: CardDraft): Record<string, unknown> {
  const total = draft.cards.reduce((a, b) => a + b, 0);
  if (total === 0) return { scheme: { type: "basic" } };
  return { scheme: { type: "deck", cards: [...draft.cards] } };
}

/**
 * Replace one perspective's comparisons inside the current config's
 * perspective list. Perspective lists replace wholesale in a delta, so
 * the untouched entries ride along unchanged.
 */
export function comparisonsDelta(
  currentPerspectives: Array<Record<string, unknown>>,
  draft: ComparisonDraft,
): Record<string, unknown> {
  let found = false;
  const next = currentPerspectives.map((p) => {
    if (p.name !== draft.perspective) return { ...p };
    found = true;
    return {
      ...p,
      kind: "elicited",
      comparisons: draft.comparisons.map((c) => [...c]),
    };
  });
  if (!found) {
    next.push({
      name: draft.perspective,
      kind: "elicited",
      comparisons: draft.comparisons.map((c) => [...c]),
    });
  }
  return { perspectives: next };
}

export interface ConflictNotice {
  perspective: string;
  conflicts: Array<[string, string]>;
  detail: string;
  code: string;
}

/**
 * Map a service rejection to what the panel shows. Returns null for
 * errors that are not elicitation conflicts (those go to the generic
 * error area instead).
 */
export function conflictNotice(err: unknown): ConflictNotice | null {
  const problem: ProblemDoc | null =
    err instanceof ProblemError ? err.problem : isProblemDoc(err) ? err : null;
  if (!problem || problem.code !== "infeasible-elicitation") return null;
  return {
    perspective: problem.perspective ?? "",
    conflicts: (problem.conflicts ?? []).map((c) => [c[0], c[1]]),
    detail: problem.detail,
    code: problem.code,
  };
}

function isProblemDoc(x: unknown): x is ProblemDoc {
  return (
    typeof x === "object" &&
    x !== null &&
    typeof (x as ProblemDoc).code === "string" &&
    typeof (x as ProblemDoc).detail === "string"
  );
}
