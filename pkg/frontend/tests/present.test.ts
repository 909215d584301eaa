import { describe, expect, it } from "vitest";

import {
  buildReviewPanel,
  groupProjects,
  renderDashboard,
  renderInbox,
  renderReviewPanel,
  reviewControls,
  sparkline,
  traceRows,
} from "../src/present.js";
import type { DocumentFull, DocumentSummary, ProjectView } from "../src/types.js";

function project(overrides: Partial<ProjectView> = {}): ProjectView {
  return {
    project_id: "alpha-bravo-carol-delta",
    status: "completed",
    paused: false,
    iteration: 2,
    remit: "write it",
    route: "compose",
    finish_reason: null,
    verdict_trace: [
      { iteration: 1, verdict: "FABRICATED" },
      { iteration: 2, verdict: "SUBSTANTIATED" },
    ],
    score_trace: [{ iteration: 2, score: 90 }],
    feedback_log: [{ iteration: 1, source: "Corroborator", text: "unsupported claim" }],
    ledger: { input_tokens: 10, output_tokens: 5, cached_input_tokens: 0, cost_usd: 0.01 },
    latest_score: 90,
    latest_verdict: "SUBSTANTIATED",
    ...overrides,
  };
}

describe("groupProjects", () => {
  it("computes counts and percentages from the listing", () => {
    const projects = [
      project({ project_id: "a-a-a-a" }),
      project({ project_id: "b-b-b-b" }),
      project({ project_id: "c-c-c-c", status: "active" }),
    ];
    const groups = groupProjects(projects);
    const byStatus = Object.fromEntries(groups.map((g) => [g.status, g]));
    // 2 completed + 1 active -> 66.7% / 33.3%
    expect(byStatus.completed.count).toBe(2);
    expect(byStatus.completed.percentage).toBe(66.7);
    expect(byStatus.active.count).toBe(1);
    expect(byStatus.active.percentage).toBe(33.3);
    expect(byStatus.failed.count).toBe(0);
    expect(byStatus.aborted.count).toBe(0);
  });

  it("yields zero counts for an empty engine", () => {
    for (const group of groupProjects([])) {
      expect(group.count).toBe(0);
      expect(group.percentage).toBe(0);
    }
    expect(renderDashboard(groupProjects([]))).toContain("No projects yet");
  });
});

describe("sparkline", () => {
  it("maps the score range onto the block glyphs", () => {
    expect(sparkline([0])).toBe("▁");
    expect(sparkline([100])).toBe("█");
    expect(sparkline([28, 85, 92])).toHaveLength(3);
    expect(sparkline([])).toBe("");
  });
});

describe("reviewControls", () => {
  it("enables promote only for completed and abort only for active", () => {
    expect(reviewControls("completed")).toEqual({ promoteEnabled: true, abortEnabled: false });
    expect(reviewControls("active")).toEqual({ promoteEnabled: false, abortEnabled: true });
    expect(reviewControls("failed")).toEqual({ promoteEnabled: false, abortEnabled: false });
    expect(reviewControls("aborted")).toEqual({ promoteEnabled: false, abortEnabled: false });
  });
});

describe("traceRows", () => {
  it("aligns verdicts with scores, leaving unscored iterations blank", () => {
    expect(traceRows(project())).toEqual([
      { iteration: 1, verdict: "FABRICATED", score: null },
      { iteration: 2, verdict: "SUBSTANTIATED", score: 90 },
    ]);
  });
});

function draftSummary(id: string, projectId: string, iteration: number): DocumentSummary {
  return {
    id,
    title: `draft ${iteration}`,
    visibility: "draft",
    metadata: {
      source_type: "draft",
      classification: "",
      authorship: "Composer",
      created_at: iteration,
      updated_at: iteration,
      keywords: [],
      group: "",
      project_id: projectId,
      iteration,
      verdict: null,
      critic_score: null,
    },
  };
}

describe("buildReviewPanel", () => {
  const view = project();
  const drafts = [
    draftSummary("d1", view.project_id, 1),
    draftSummary("d2", view.project_id, 2),
    draftSummary("zz", "other-project-id-x", 9),
  ];
  const full: DocumentFull = {
    id: "d2",
    title: "draft 2",
    visibility: "draft",
    content: "final draft body",
    metadata: drafts[1].metadata,
  };

  it("selects the latest draft belonging to the project", () => {
    const model = buildReviewPanel(view, drafts, full);
    expect(model.draft?.id).toBe("d2");
    expect(model.draft?.visibility).toBe("draft");
    expect(model.feedbackPane).toHaveLength(1);
    expect(model.feedbackPane[0].label).toContain("Corroborator");
  });

  it("renders gated controls and visibility labels", () => {
    const html = renderReviewPanel(buildReviewPanel(view, drafts, full));
    expect(html).toContain('<button class="promote" >');
    expect(html).toContain('<button class="abort" disabled>');
    expect(html).toContain("[draft]");
    expect(html).toContain("[feedback]");
    expect(html).toContain("final draft body");
  });

  it("escapes document content", () => {
    const spiky: DocumentFull = { ...full, content: "<script>alert(1)</script>" };
    const html = renderReviewPanel(buildReviewPanel(view, drafts, spiky));
    expect(html).not.toContain("<script>alert(1)");
    expect(html).toContain("&lt;script&gt;");
  });
});

describe("renderInbox", () => {
  it("shows an empty state without tickets", () => {
    expect(renderInbox([])).toContain("No open clarifications");
  });

  it("renders one answer form per ticket", () => {
    const html = renderInbox([
      { id: "t1", project_id: "p-p-p-p", question: "which venue?" },
    ]);
    expect(html).toContain('data-ticket="t1"');
    expect(html).toContain("which venue?");
    expect(html).toContain("<button type=\"submit\">Answer</button>");
  });
});
