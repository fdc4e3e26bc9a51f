import { describe, expect, it } from "vitest";

import { FetchLike, ProblemError, ServiceClient } from "../src/api";
import { loadFixture } from "./helpers";
import type { ProblemDoc } from "../src/types";

function fakeFetch(
  routes: Record<string, { status: number; body: unknown }>,
  calls: Array<{ url: string; method: string; body?: string }> = [],
): FetchLike {
  return async (url, init) => {
    calls.push({ url, method: init?.method ?? "GET", body: init?.body });
    const key = `${init?.method ?? "GET"} ${url}`;
    const route = routes[key];
    if (!route) throw new Error(`unexpected request: ${key}`);
    return {
      ok: route.status < 400,
      status: route.status,
      json: async () => route.body,
    };
  };
}

describe("service client", () => {
  it("drives the session lifecycle with JSON envelopes", async () => {
    const calls: Array<{ url: string; method: string; body?: string }> = [];
    const client = new ServiceClient(
      "http://svc/",
      fakeFetch(
        {
          "POST http://svc/sessions": { status: 201, body: { id: "s-1" } },
          "PUT http://svc/sessions/s-1/dataset": {
            status: 200,
            body: { alternatives: ["S1"], criteria: ["Math"] },
          },
          "POST http://svc/sessions/s-1/run": { status: 200, body: { version: 1 } },
        },
        calls,
      ),
    );
    const created = await client.createSession();
    expect(created.id).toBe("s-1");
    await client.putDataset("s-1", "csv", "alternative,Math\nS1,50\n");
    expect(JSON.parse(calls[1]!.body!)).toEqual({
      format: "csv",
      content: "alternative,Math\nS1,50\n",
    });
    const run = await client.run("s-1");
    expect(run.version).toBe(1);
  });

  it("raises ProblemError carrying the recorded conflict payload", async () => {
    const recorded = loadFixture<{ status: number; body: ProblemDoc }>(
      "infeasible_conflict.json",
    );
    const client = new ServiceClient(
      "http://svc",
      fakeFetch({
        "POST http://svc/sessions/s-1/run": {
          status: recorded.status,
          body: recorded.body,
        },
      }),
    );
    const err = await client.run("s-1").catch((e: unknown) => e);
    expect(err).toBeInstanceOf(ProblemError);
    const problem = err as ProblemError;
    expect(problem.status).toBe(409);
    expect(problem.code).toBe("infeasible-elicitation");
    expect(problem.problem.conflicts).toEqual([
      ["A", "B"],
      ["C", "D"],
    ]);
  });

  it("defaults missing problem fields instead of crashing", async () => {
    const client = new ServiceClient(
      "http://svc",
      fakeFetch({
        "GET http://svc/sessions/zzz/report": {
          status: 404,
          body: { detail: "no such session" },
        },
      }),
    );
    const err = (await client.getReport("zzz").catch((e: unknown) => e)) as ProblemError;
    expect(err.code).toBe("unknown");
    expect(err.message).toBe("no such session");
  });

  it("addresses a specific report version", async () => {
    const calls: Array<{ url: string }> = [];
    const client = new ServiceClient(
      "http://svc",
      fakeFetch(
        { "GET http://svc/sessions/s-1/report?version=2": { status: 200, body: {} } },
        calls as never,
      ),
    );
    await client.getReport("s-1", 2);
    expect(calls[0]!.url).toContain("?version=2");
  });
});
