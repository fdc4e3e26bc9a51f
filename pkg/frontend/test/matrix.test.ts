import { describe, expect, it } from "vitest";

import { CELL_COLOR, CELL_SHAPE, matrixView, renderMatrixHTML } from "../src/matrix";
import { COARSEN_FOUR } from "../src/preview";
import type { PairExplanation } from "../src/types";
import { loadFixture, loadReport } from "./helpers";

const report = loadReport("report_value_lp.json");

describe("matrix view of the bundled session", () => {
  it("renders exactly the report's cell labels, no local recomputation", () => {
    const view = matrixView(report);
    const labels = view.cells.map((row) => row.map((cell) => cell.label));
    expect(labels).toEqual(report.seven);
    expect(view.reportVersion).toBe(report.version);
    expect(view.alternatives).toEqual(report.alternatives);
  });

  it("keys every value to a distinct color and a distinct shape", () => {
    const colors = Object.values(CELL_COLOR);
    const shapes = Object.values(CELL_SHAPE);
    expect(new Set(colors).size).toBe(7);
    expect(new Set(shapes).size).toBe(7);
  });

  it("names the pair on each cell for the explanation drawer", () => {
    const view = matrixView(report);
    const cell = view.cells[1]![3]!;
    expect([cell.row, cell.col]).toEqual(["S2", "S4"]);
    const html = renderMatrixHTML(view);
    expect(html).toContain('data-pair="S2,S4"');
    expect(html).toContain(`data-report-version="${report.version}"`);
  });

  it("coarsening toggle recolors through the label map only", () => {
    const seven = matrixView(report, "seven");
    const four = matrixView(report, "four");
    for (let i = 0; i < report.alternatives.length; i++) {
      for (let j = 0; j < report.alternatives.length; j++) {
        const before = seven.cells[i]![j]!.label as keyof typeof COARSEN_FOUR;
        expect(four.cells[i]![j]!.label).toBe(COARSEN_FOUR[before]);
      }
    }
    // and the four-valued grid the service computed agrees with the map
    const mapped = report.seven.map((row) => row.map((v) => COARSEN_FOUR[v]));
    expect(mapped).toEqual(report.four);
  });

  it("escapes markup in alternative ids", () => {
    const hostile = {
      ...report,
      alternatives: ['<img src=x onerror=alert(1)>', "b", "c", "d", "e"],
    };
    const html = renderMatrixHTML(matrixView(hostile));
    expect(html).not.toContain("<img");
    expect(html).toContain("&lt;img");
  });
});

describe("explanation drawer payload", () => {
  it("carries the verdict and narrative for the selected cell", () => {
    const pair = loadFixture<PairExplanation>("pair_S2_S4.json");
    expect(pair.pair).toEqual(["S2", "S4"]);
    expect(pair.seven).toBe(report.seven[1]![3]);
    expect(pair.narrative).toContain("Pair (S2, S4)");
  });
});
