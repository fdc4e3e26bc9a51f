/** View state for one session per tab.
 *
 * The invariant the reducer protects: anything rendered as a matrix or
 * ranking is backed by a persisted report version held in the state;
 * previews live in a separate slot and carry the preview flag. Loading
 * a report clears previews so the two can never be conflated.
 */

import type { RethresholdPreview } from "./preview.js";
import type { CardDraft, ComparisonDraft, ConflictNotice } from "./elicitation.js";
import type { ReportDoc } from "./types.js";

export interface ViewState {
  sessionId: string | null;
  report: ReportDoc | null;
  reportVersion: number | null;
  selectedPair: [string, string] | null;
  pendingDelta: Record<string, unknown> | null;
  thresholdPreview: RethresholdPreview | null;
  cardDraft: CardDraft;
  comparisonDrafts: ComparisonDraft[];
  conflict: ConflictNotice | null;
  running: boolean;
}

export function initialState(): ViewState {
  return {
    sessionId: null,
    report: null,
    reportVersion: null,
    selectedPair: null,
    pendingDelta: null,
    thresholdPreview: null,
    cardDraft: { cards: [0, 0, 0, 0] },
    comparisonDrafts: [],
    conflict: null,
    running: false,
  };
}

export type Action =
  | { kind: "session-created"; id: string }
  | { kind: "run-started" }
  | { kind: "report-loaded"; report: ReportDoc }
  | { kind: "pair-selected"; pair: [string, string] | null }
  | { kind: "delta-staged"; delta: Record<string, unknown> }
  | { kind: "threshold-previewed"; preview: RethresholdPreview }
  | { kind: "cards-drafted"; draft: CardDraft }
  | { kind: "comparisons-drafted"; draft: ComparisonDraft }
  | { kind: "conflict-received"; notice: ConflictNotice }
  | { kind: "conflict-dismissed" };

export function reduce(state: ViewState, action: Action): ViewState {
  switch (action.kind) {
    case "session-created":
      return { ...initialState(), sessionId: action.id };
    case "run-started":
      return { ...state, running: true, conflict: null };
    case "report-loaded":
      // authoritative data invalidates previews and staged deltas
      return {
        ...state,
        report: action.report,
        reportVersion: action.report.version,
        pendingDelta: null,
        thresholdPreview: null,
        conflict: null,
        running: false,
      };
    case "pair-selected": {
      if (action.pair) {
        const alts = state.report?.alternatives ?? [];
        if (!alts.includes(action.pair[0]) || !alts.includes(action.pair[1])) {
          throw new Error(`pair ${action.pair.join(",")} not in the loaded report`);
        }
      }
      return { ...state, selectedPair: action.pair };
    }
    case "delta-staged":
      return { ...state, pendingDelta: action.delta };
    case "threshold-previewed":
      if (!state.report) throw new Error("no report to preview against");
      return { ...state, thresholdPreview: action.preview };
    case "cards-drafted":
      return { ...state, cardDraft: action.draft };
    case "comparisons-drafted": {
      const rest = state.comparisonDrafts.filter(
        (d) => d.perspective !== action.draft.perspective,
      );
      return { ...state, comparisonDrafts: [...rest, action.draft] };
    }
    case "conflict-received":
      return { ...state, conflict: action.notice, running: false };
    case "conflict-dismissed":
      return { ...state, conflict: null };
  }
}
