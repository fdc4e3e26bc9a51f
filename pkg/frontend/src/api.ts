/** Thin client for the session service. Every non-2xx response raises
 * ProblemError carrying the parsed problem+json body, so callers can
 * branch on `code` ("infeasible-elicitation", "not-run", ...) instead
 * of status text.
 */

import type {
  ConfigDoc,
  HistoryEntry,
  PairExplanation,
  ProblemDoc,
  ReportDoc,
} from "./types.js";

export class ProblemError extends Error {
  readonly status: number;
  readonly problem: ProblemDoc;

  constructor(status: number, problem: ProblemDoc) {
    super(problem.detail || problem.title || `HTTP ${status}`);
    this.name = "ProblemError";
    this.status = status;
    this.problem = problem;
  }

  get code(): string {
    return this.problem.code;
  }
}

export type FetchLike = (url: string, init?: {
  method?: string;
  headers?: Record<string, string>;
  body?: string;
}) => Promise<{
  ok: boolean;
  status: number;
  json(): Promise<unknown>;
}>;

export class ServiceClient {
  private readonly base: string;
  private readonly fetchImpl: FetchLike;

  constructor(baseUrl: string, fetchImpl?: FetchLike) {
    this.base = baseUrl.replace(/\/$/, "");
    this.fetchImpl = fetchImpl ?? (globalThis.fetch as unknown as FetchLike);
    if (!this.fetchImpl) throw new Error("no fetch implementation available");
  }

  private async request<T>(method: string, path: string, body?: unknown): Promise<T> {
    const res = await this.fetchImpl(`${this.base}${path}`, {
      method,
      headers: body === undefined ? {} : { "content-type": "application/json" },
      body: body === undefined ? undefined : JSON.stringify(body),
    });
    const payload = (await res.json()) as unknown;
    if (!res.ok) {
      const problem = (payload ?? {}) as Partial<ProblemDoc>;
      throw new ProblemError(res.status, {
        ...problem,
        title: problem.title ?? "error",
        status: problem.status ?? res.status,
        detail: problem.detail ?? "",
        code: problem.code ?? "unknown",
      });
    }
    return payload as T;
  }

  createSession(): Promise<{ id: string }> {
    return this.request("POST", "/sessions");
  }

  listSessions(): Promise<string[]> {
    return this.request("GET", "/sessions");
  }

  putDataset(sid: string, format: "csv" | "json", content: unknown) {
    return this.request<{ alternatives: string[]; criteria: string[] }>(
      "PUT",
      `/sessions/${sid}/dataset`,
      { format, content },
    );
  }

  putConfig(sid: string, config: ConfigDoc | Record<string, unknown>) {
    return this.request<ConfigDoc>("PUT", `/sessions/${sid}/config`, config);
  }

  run(sid: string): Promise<{ version: number }> {
    return this.request("POST", `/sessions/${sid}/run`);
  }

  getReport(sid: string, version?: number): Promise<ReportDoc> {
    const suffix = version === undefined ? "" : `?version=${version}`;
    return this.request("GET", `/sessions/${sid}/report${suffix}`);
  }

  verifyReport(sid: string): Promise<{ ok: boolean; problems: string[] }> {
    return this.request("GET", `/sessions/${sid}/report/verify`);
  }

  getPair(sid: string, a: string, b: string): Promise<PairExplanation> {
    return this.request("GET", `/sessions/${sid}/pairs/${a}/${b}`);
  }

  /** Apply a config delta off the latest report; returns the new report. */
  whatif(sid: string, delta: Record<string, unknown>): Promise<ReportDoc> {
    return this.request("POST", `/sessions/${sid}/whatif`, delta);
  }

  history(sid: string): Promise<{ versions: HistoryEntry[] }> {
    return this.request("GET", `/sessions/${sid}/history`);
  }
}
