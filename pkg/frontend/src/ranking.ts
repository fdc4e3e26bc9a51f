/** Ranking bar view and side-by-side version diff. */

import { esc } from "./html.js";
import type { ReportDoc } from "./types.js";

export interface RankingRow {
  alternative: string;
  /** 1-based position; tied alternatives share one */
  position: number;
  score: number;
  scoreExact: string;
}

export function rankingView(report: ReportDoc): {
  reportVersion: number;
  rankingString: string;
  rows: RankingRow[];
} {
  const rows: RankingRow[] = [];
  let position = 1;
  for (const group of report.ranking) {
    for (const alternative of group) {
      const score = report.scores[alternative];
      if (!score) throw new Error(`no score for ${alternative}`);
      rows.push({
        alternative,
        position,
        score: score.float,
        scoreExact: score.exact,
      });
    }
    position += group.length;
  }
  return { reportVersion: report.version, rankingString: report.ranking_string, rows };
}

/** Horizontal bar list; widths scale the report's scores, nothing more. */
export function renderRankingHTML(view: ReturnType<typeof rankingView>): string {
  const maxAbs = Math.max(...view.rows.map((r) => Math.abs(r.score)), 0);
  const items = view.rows
    .map((r) => {
      const width = maxAbs === 0 ? 0 : Math.abs(r.score) / maxAbs;
      const side = r.score < 0 ? "negative" : "positive";
      return (
        `<li data-alternative="${esc(r.alternative)}" data-position="${r.position}">` +
        `<span class="name">${r.position}. ${esc(r.alternative)}</span>` +
        `<span class="bar ${side}" style="width:${(width * 100).toFixed(1)}%"></span>` +
        `<span class="score" title="${esc(r.scoreExact)}">${r.score}</span></li>`
      );
    })
    .join("");
  return (
    `<ol class="ranking-bars" data-report-version="${view.reportVersion}">` + items + `</ol>`
  );
}

export interface RankingMove {
  alternative: string;
  from: number;
  to: number;
  /** positive means it climbed */
  moved: number;
}

/** Position changes from one report version to another. */
export function rankingDiff(before: ReportDoc, after: ReportDoc): RankingMove[] {
  const pos = (doc: ReportDoc): Map<string, number> => {
    const out = new Map<string, number>();
    let p = 1;
    for (const group of doc.ranking) {
      for (const alternative of group) out.set(alternative, p);
      p += group.length;
    }
    return out;
  };
  const beforePos = pos(before);
  const afterPos = pos(after);
  const moves: RankingMove[] = [];
  for (const [alternative, from] of beforePos) {
    const to = afterPos.get(alternative);
    if (to === undefined) continue;
    moves.push({ alternative, from, to, moved: from - to });
  }
  return moves.sort((a, b) => a.to - b.to || a.alternative.localeCompare(b.alternative));
}
