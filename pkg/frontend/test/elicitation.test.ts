import { describe, expect, it } from "vitest";

import { ProblemError } from "../src/api";
import {
  comparisonsDelta,
  conflictNotice,
  previewCardDraft,
  schemeDelta,
} from "../src/elicitation";
import { loadFixture } from "./helpers";
import type { ProblemDoc } from "../src/types";

interface ConflictFixture {
  status: number;
  content_type: string;
  body: ProblemDoc;
}

const recorded = loadFixture<ConflictFixture>("infeasible_conflict.json");

describe("service conflict payload", () => {
  it("was recorded as problem+json with a machine readable code", () => {
    expect(recorded.status).toBe(409);
    expect(recorded.content_type).toContain("application/problem+json");
    expect(recorded.body.code).toBe("infeasible-elicitation");
  });

  it("surfaces inline next to the draft: perspective and conflicts", () => {
    const notice = conflictNotice(new ProblemError(recorded.status, recorded.body));
    expect(notice).not.toBeNull();
    expect(notice!.perspective).toBe("panel");
    expect(notice!.conflicts).toEqual([
      ["A", "B"],
      ["C", "D"],
    ]);
    expect(notice!.detail).toContain("panel");
    expect(notice!.detail).toContain("A over B");
  });

  it("accepts the bare problem document as well", () => {
    const notice = conflictNotice(recorded.body);
    expect(notice?.perspective).toBe("panel");
  });

  it("passes unrelated errors through to the generic handler", () => {
    expect(conflictNotice(new Error("boom"))).toBeNull();
    const other = new ProblemError(404, {
      title: "not-found",
      status: 404,
      detail: "nope",
      code: "unknown-session",
    });
    expect(conflictNotice(other)).toBeNull();
  });
});

describe("drafts to deltas", () => {
  it("card draft previews its levels and builds a scheme delta", () => {
    const draft = { cards: [6, 5, 3, 2] as [number, number, number, number] };
    expect(previewCardDraft(draft).levels).toEqual(["1", "6/13", "0", "4/13", "7/13"]);
    expect(schemeDelta(draft)).toEqual({ scheme: { type: "deck", cards: [6, 5, 3, 2] } });
    expect(schemeDelta({ cards: [0, 0, 0, 0] })).toEqual({ scheme: { type: "basic" } });
  });

  it("comparison draft replaces one perspective, keeps the rest", () => {
    const current = [
      { name: "egalitarian", kind: "perturbation", central: ["1/4"], radius: "3/20" },
      { name: "panel", kind: "elicited", comparisons: [["S1", "S2"]] },
    ];
    const delta = comparisonsDelta(current, {
      perspective: "panel",
      comparisons: [
        ["S2", "S3"],
        ["S4", "S3"],
      ],
    });
    const perspectives = delta.perspectives as Array<Record<string, unknown>>;
    expect(perspectives).toHaveLength(2);
    expect(perspectives[0]).toEqual(current[0]);
    expect(perspectives[1]).toEqual({
      name: "panel",
      kind: "elicited",
      comparisons: [
        ["S2", "S3"],
        ["S4", "S3"],
      ],
    });
    // drafts never mutate the config they started from
    expect(current[1]!.comparisons).toEqual([["S1", "S2"]]);
  });

  it("appends a new perspective when the name is unknown", () => {
    const delta = comparisonsDelta([], {
      perspective: "panel",
      comparisons: [["A", "B"]],
    });
    const perspectives = delta.perspectives as Array<Record<string, unknown>>;
    expect(perspectives).toEqual([
      { name: "panel", kind: "elicited", comparisons: [["A", "B"]] },
    ]);
  });
});
