/** Wire types for the prefseven HTTP API (schema "prefseven/1"). */

export type SevenLabel = "T" | "sT" | "U" | "K" | "fK" | "sF" | "F";
export type FourLabel = "T4" | "U4" | "K4" | "F4";
export type ThreeLabel = "T3" | "Other3" | "F3";
export type TriLabel = "T" | "F" | "U";

/** Every numeric field: exact rational string plus float convenience. */
export interface NumberJson {
  exact: string;
  float: number;
}

export interface VectorJson {
  exact: string[];
  float: number[];
}

export interface PwiBlock {
  indices: Record<string, NumberJson>;
  samples: number;
}

export interface PerspectiveBlock {
  name: string;
  kind: "perturbation" | "elicited";
  polytope: unknown;
  vertices: VectorJson[] | null;
  pwi: PwiBlock | null;
  verdicts: TriLabel[][];
  evidence: Record<string, unknown> | null;
}

export interface SchemeDoc {
  type: "basic" | "deck";
  cards?: number[];
  values?: Record<string, NumberJson>;
}

export interface ConfigDoc {
  mode: "value" | "outranking";
  engine: "lp" | "vertices" | "smaa";
  perspectives: Array<Record<string, unknown>>;
  scheme?: SchemeDoc;
  smaa?: { samples: number; seed: unknown; threshold: string };
  outranking?: { q: string; k: string };
  coarsening?: string;
}

export interface ReportDoc {
  schema: string;
  version: number;
  based_on: number | null;
  config: ConfigDoc;
  dataset: { criteria: string[]; alternatives: string[]; grades: string[][] };
  alternatives: string[];
  criteria: string[];
  perspectives: PerspectiveBlock[];
  seven: SevenLabel[][];
  four: FourLabel[][];
  three: ThreeLabel[][];
  scheme: SchemeDoc;
  scores: Record<string, NumberJson>;
  ranking: string[][];
  ranking_string: string;
  progress: { state: string; percent: number };
}

export interface PairExplanation {
  pair: [string, string];
  seven: SevenLabel;
  narrative: string;
  rows: unknown[];
  [key: string]: unknown;
}

/** problem+json error body; code is machine readable. */
export interface ProblemDoc {
  title: string;
  status: number;
  detail: string;
  code: string;
  perspective?: string;
  conflicts?: Array<[string, string]>;
  violations?: Array<Record<string, unknown>>;
  [key: string]: unknown;
}

export interface HistoryEntry {
  version: number;
  based_on: number | null;
  mode: string;
  engine: string;
  scheme: string;
  ranking_string: string;
}
