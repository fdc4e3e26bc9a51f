import { describe, expect, it } from "vitest";

import { rethresholdPreview } from "../src/preview";
import { loadReport } from "./helpers";

const base = loadReport("report_value_smaa.json");
const reruns = [
  ["99/100", "rerun_t_99_100.json"],
  ["3/4", "rerun_t_3_4.json"],
  ["11/20", "rerun_t_11_20.json"],
] as const;

describe("t slider preview against authoritative re-runs", () => {
  it.each(reruns)("t = %s", (threshold, fixture) => {
    const rerun = loadReport(fixture);
    expect(rerun.config.smaa?.threshold).toBe(threshold);
    const preview = rethresholdPreview(base, threshold);
    expect(preview.preview).toBe(true);
    expect(preview.seven).toEqual(rerun.seven);
    rerun.perspectives.forEach((block, i) => {
      expect(preview.verdicts[i]).toEqual(block.verdicts);
    });
  });

  it("re-runs reuse the stored winning indices, so agreement is exact", () => {
    for (const [, fixture] of reruns) {
      const rerun = loadReport(fixture);
      rerun.perspectives.forEach((block, i) => {
        expect(block.pwi?.indices).toEqual(base.perspectives[i]!.pwi?.indices);
      });
    }
  });

  it("the three thresholds do not all produce one grid", () => {
    const sevens = reruns.map(([, f]) => JSON.stringify(loadReport(f).seven));
    expect(new Set(sevens).size).toBeGreaterThan(1);
  });

  it("previewing the report's own threshold reproduces its matrix", () => {
    const t = base.config.smaa?.threshold;
    expect(t).toBeTruthy();
    const preview = rethresholdPreview(base, t!);
    expect(preview.seven).toEqual(base.seven);
  });

  it("refuses reports without stored indices", () => {
    const lp = loadReport("report_value_lp.json");
    expect(() => rethresholdPreview(lp, "17/20")).toThrow(/winning indices/);
  });
});
