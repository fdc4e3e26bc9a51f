import { describe, expect, it } from "vitest";

import { conflictNotice } from "../src/elicitation";
import { matrixView } from "../src/matrix";
import { rethresholdPreview } from "../src/preview";
import { rankingView } from "../src/ranking";
import { initialState, reduce, ViewState } from "../src/state";
import { ProblemError } from "../src/api";
import { loadFixture, loadReport } from "./helpers";
import type { ProblemDoc } from "../src/types";

const lpReport = loadReport("report_value_lp.json");
const smaaReport = loadReport("report_value_smaa.json");

function loaded(report = lpReport): ViewState {
  let s = reduce(initialState(), { kind: "session-created", id: "s-1" });
  s = reduce(s, { kind: "report-loaded", report });
  return s;
}

describe("view state", () => {
  it("matrix and ranking always reference the same report version", () => {
    const s = loaded();
    const matrix = matrixView(s.report!);
    const ranking = rankingView(s.report!);
    expect(matrix.reportVersion).toBe(s.reportVersion);
    expect(ranking.reportVersion).toBe(s.reportVersion);
  });

  it("loading a report clears previews and staged deltas", () => {
    let s = loaded(smaaReport);
    s = reduce(s, {
      kind: "threshold-previewed",
      preview: rethresholdPreview(smaaReport, "3/4"),
    });
    s = reduce(s, { kind: "delta-staged", delta: { smaa: { threshold: "3/4" } } });
    expect(s.thresholdPreview?.preview).toBe(true);
    const rerun = loadReport("rerun_t_3_4.json");
    s = reduce(s, { kind: "report-loaded", report: rerun });
    expect(s.thresholdPreview).toBeNull();
    expect(s.pendingDelta).toBeNull();
    expect(s.reportVersion).toBe(rerun.version);
  });

  it("rejects selecting a pair outside the loaded report", () => {
    const s = loaded();
    expect(() =>
      reduce(s, { kind: "pair-selected", pair: ["S2", "NOPE"] }),
    ).toThrow(/not in the loaded report/);
    const ok = reduce(s, { kind: "pair-selected", pair: ["S2", "S4"] });
    expect(ok.selectedPair).toEqual(["S2", "S4"]);
  });

  it("threshold preview requires a loaded report", () => {
    const bare = reduce(initialState(), { kind: "session-created", id: "x" });
    expect(() =>
      reduce(bare, {
        kind: "threshold-previewed",
        preview: rethresholdPreview(smaaReport, "3/4"),
      }),
    ).toThrow(/no report/);
  });

  it("a conflict halts the run and stays until dismissed or resolved", () => {
    const recorded = loadFixture<{ status: number; body: ProblemDoc }>(
      "infeasible_conflict.json",
    );
    let s = loaded();
    s = reduce(s, { kind: "run-started" });
    expect(s.running).toBe(true);
    const notice = conflictNotice(new ProblemError(recorded.status, recorded.body))!;
    s = reduce(s, { kind: "conflict-received", notice });
    expect(s.running).toBe(false);
    expect(s.conflict?.perspective).toBe("panel");
    const dismissed = reduce(s, { kind: "conflict-dismissed" });
    expect(dismissed.conflict).toBeNull();
    const resolved = reduce(s, { kind: "report-loaded", report: lpReport });
    expect(resolved.conflict).toBeNull();
  });

  it("comparison drafts replace per perspective", () => {
    let s = loaded();
    s = reduce(s, {
      kind: "comparisons-drafted",
      draft: { perspective: "panel", comparisons: [["S1", "S2"]] },
    });
    s = reduce(s, {
      kind: "comparisons-drafted",
      draft: { perspective: "panel", comparisons: [["S2", "S3"]] },
    });
    expect(s.comparisonDrafts).toEqual([
      { perspective: "panel", comparisons: [["S2", "S3"]] },
    ]);
  });
});
