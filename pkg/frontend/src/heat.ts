/** Pairwise-winning-index heat view for one sampled perspective.
 *
 * Every number shown is lifted straight from the report's stored
 * indices and verdicts; nothing is resampled or rethresholded here.
 */

import { esc } from "./html.js";
import type { ReportDoc, TriLabel } from "./types.js";

export interface HeatCell {
  row: string;
  col: string;
  /** stored index as the service printed it, in [0, 1] */
  value: number;
  exact: string;
  /** the service's own verdict for this pair at the stored threshold */
  verdict: TriLabel;
}

export interface HeatView {
  reportVersion: number;
  perspective: string;
  threshold: string;
  samples: number;
  alternatives: string[];
  /** null on the diagonal */
  cells: Array<Array<HeatCell | null>>;
}

export function pwiHeatView(report: ReportDoc, perspective: string): HeatView {
  const block = report.perspectives.find((p) => p.name === perspective);
  if (!block) throw new Error(`no perspective named ${perspective} in the report`);
  const pwi = block.pwi;
  if (!pwi) throw new Error(`perspective ${perspective} has no winning indices to plot`);
  const threshold = report.config.smaa?.threshold;
  if (!threshold) throw new Error("report carries indices but no sampling settings");
  const alts = report.alternatives;
  const cells = alts.map((a, i) =>
    alts.map((b, j): HeatCell | null => {
      if (i === j) return null;
      const entry = pwi.indices[`${a},${b}`];
      if (!entry) throw new Error(`no stored index for pair ${a},${b}`);
      const verdict = block.verdicts[i]?.[j];
      if (!verdict) throw new Error(`no stored verdict for pair ${a},${b}`);
      return { row: a, col: b, value: entry.float, exact: entry.exact, verdict };
    }),
  );
  return {
    reportVersion: report.version,
    perspective,
    threshold,
    samples: pwi.samples,
    alternatives: [...alts],
    cells,
  };
}

/** Static heat table; cell opacity is the stored index itself. */
export function renderPwiHeatHTML(view: HeatView): string {
  const head = view.alternatives.map((a) => `<th scope="col">${esc(a)}</th>`).join("");
  const body = view.cells
    .map((row, i) => {
      const cells = row
        .map((cell) => {
          if (cell === null) return `<td class="diagonal"></td>`;
          return (
            `<td data-pair="${esc(cell.row)},${esc(cell.col)}"` +
            ` data-verdict="${cell.verdict}"` +
            ` style="background:rgba(26,127,55,${cell.value.toFixed(3)})"` +
            ` title="${esc(cell.exact)}"` +
            ` aria-label="${esc(cell.row)} vs ${esc(cell.col)}: ${cell.value.toFixed(3)}">` +
            `${cell.value.toFixed(2)}</td>`
          );
        })
        .join("");
      return `<tr><th scope="row">${esc(view.alternatives[i]!)}</th>${cells}</tr>`;
    })
    .join("");
  return (
    `<table class="pwi-heat" data-report-version="${view.reportVersion}"` +
    ` data-perspective="${esc(view.perspective)}"` +
    ` data-threshold="${esc(view.threshold)}">` +
    `<thead><tr><th></th>${head}</tr></thead><tbody>${body}</tbody></table>`
  );
}
