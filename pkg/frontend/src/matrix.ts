/** Seven-valued matrix view.
 *
 * Cell labels come straight from the persisted report document; this
 * module never recombines verdicts. Each value gets a distinct color
 * AND a distinct shape so the grid stays readable without color
 * vision.
 */

import { esc } from "./html.js";
import { COARSEN_FOUR } from "./preview.js";
import type { FourLabel, ReportDoc, SevenLabel } from "./types.js";

export const CELL_COLOR: Record<SevenLabel, string> = {
  T: "#1a7f37",
  sT: "#7fb069",
  U: "#b0b0b0",
  K: "#b8860b",
  fK: "#d4a017",
  sF: "#d0707e",
  F: "#b3202c",
};

export const CELL_SHAPE: Record<SevenLabel, string> = {
  T: "▲", // filled triangle up
  sT: "△", // open triangle up
  U: "○", // open circle
  K: "◆", // filled diamond
  fK: "◇", // open diamond
  sF: "▽", // open triangle down
  F: "▼", // filled triangle down
};

const FOUR_COLOR: Record<FourLabel, string> = {
  T4: CELL_COLOR.T,
  U4: CELL_COLOR.U,
  K4: CELL_COLOR.K,
  F4: CELL_COLOR.F,
};

const FOUR_SHAPE: Record<FourLabel, string> = {
  T4: CELL_SHAPE.T,
  U4: CELL_SHAPE.U,
  K4: CELL_SHAPE.K,
  F4: CELL_SHAPE.F,
};

export interface MatrixCell {
  row: string;
  col: string;
  label: SevenLabel | FourLabel;
  color: string;
  shape: string;
}

export interface MatrixView {
  reportVersion: number;
  coarsening: "seven" | "four";
  alternatives: string[];
  cells: MatrixCell[][];
}

export function matrixView(report: ReportDoc, coarsening: "seven" | "four" = "seven"): MatrixView {
  const alts = report.alternatives;
  const cells = report.seven.map((row, i) =>
    row.map((label, j) => {
      if (coarsening === "four") {
        const four = COARSEN_FOUR[label];
        return {
          row: alts[i]!,
          col: alts[j]!,
          label: four,
          color: FOUR_COLOR[four],
          shape: FOUR_SHAPE[four],
        };
      }
      return {
        row: alts[i]!,
        col: alts[j]!,
        label,
        color: CELL_COLOR[label],
        shape: CELL_SHAPE[label],
      };
    }),
  );
  return { reportVersion: report.version, coarsening, alternatives: [...alts], cells };
}

/** Static table markup; each cell carries data-pair for the drawer. */
export function renderMatrixHTML(view: MatrixView): string {
  const head = view.alternatives.map((a) => `<th scope="col">${esc(a)}</th>`).join("");
  const body = view.cells
    .map((row, i) => {
      const cells = row
        .map(
          (cell) =>
            `<td data-pair="${esc(cell.row)},${esc(cell.col)}"` +
            ` style="background:${cell.color}"` +
            ` aria-label="${esc(cell.row)} vs ${esc(cell.col)}: ${cell.label}">` +
            `${cell.shape}&nbsp;${cell.label}</td>`,
        )
        .join("");
      return `<tr><th scope="row">${esc(view.alternatives[i]!)}</th>${cells}</tr>`;
    })
    .join("");
  return (
    `<table class="seven-matrix" data-report-version="${view.reportVersion}"` +
    ` data-coarsening="${view.coarsening}">` +
    `<thead><tr><th></th>${head}</tr></thead><tbody>${body}</tbody></table>`
  );
}
