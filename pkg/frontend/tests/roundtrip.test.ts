/** Round-trip tests against a real scripted engine: the console's client
 * and presenters driving the live REST API, no mocks. */

import { afterAll, beforeAll, describe, expect, it } from "vitest";
import { type ChildProcess, spawn } from "node:child_process";
import { mkdtempSync, writeFileSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";

import { EngineClient } from "../src/api.js";
import { buildReviewPanel, renderReviewPanel, reviewControls } from "../src/present.js";

const PORT = 8719;
const BASE = `http://127.0.0.1:${PORT}`;

let server: ChildProcess;
const client = new EngineClient(BASE);

const SECRET = "SECRET-CANDIDATE-SOURCE-MARKER";

function scenario(name: string, extras: Record<string, unknown[]> = {}) {
  return {
    name,
    queues: {
      Commutator: [{ type: "route_choice", route: "compose" }],
      Composer: [
        { type: "draft_submission", title: "d1", content: "first draft body" },
        { type: "draft_submission", title: "d2", content: "second draft body" },
      ],
      Corroborator: [
        { type: "verdict_report", verdict: "FABRICATED", rationale: "claim X has no source" },
        { type: "verdict_report", verdict: "SUBSTANTIATED", rationale: "all claims traced" },
      ],
      Critic: [{ type: "score_report", score: 92, feedback: "requirements met" }],
      ...extras,
    },
  };
}

async function waitFor<T>(probe: () => Promise<T | null>, timeoutMs = 30_000): Promise<T> {
  const deadline = Date.now() + timeoutMs;
  while (Date.now() < deadline) {
    const value = await probe().catch(() => null);
    if (value !== null) return value;
    await new Promise((resolve) => setTimeout(resolve, 50));
  }
  throw new Error("timed out waiting for engine state");
}

async function post(path: string, body: unknown): Promise<Record<string, any>> {
  const response = await fetch(BASE + path, {
    method: "POST",
    headers: { "content-type": "application/json" },
    body: JSON.stringify(body),
  });
  if (!response.ok) throw new Error(`${path}: HTTP ${response.status}`);
  return (await response.json()) as Record<string, any>;
}

async function startProject(scenarioBody: unknown, sourceContent: string): Promise<string> {
  const doc = await post("/documents", { title: "source", content: sourceContent });
  const project = await post("/projects", {
    remit: "compose a short report",
    source_ids: [doc.id],
    scenario: scenarioBody,
  });
  return project.project_id as string;
}

beforeAll(async () => {
  const workdir = mkdtempSync(join(tmpdir(), "console-e2e-"));
  const config = join(workdir, "engine.json");
  writeFileSync(config, JSON.stringify({ catalogue_dir: join(workdir, "catalogue") }));
  server = spawn("scriptorium", ["serve", "--config", config, "--addr", `127.0.0.1:${PORT}`], {
    stdio: "ignore",
  });
  await waitFor(async () => {
    const response = await fetch(`${BASE}/projects`);
    return response.ok ? true : null;
  });
}, 60_000);

afterAll(() => {
  server?.kill();
});

describe("console round trips against a scripted engine", () => {
  it("answering a clarification resumes the paused project", async () => {
    const pausing = scenario("pausing", {
      Concierge: [{ type: "clarification_request", question: "which audience?" }],
    });
    const projectId = await startProject(pausing, "plain source notes");

    const ticket = await waitFor(async () => {
      const { tickets } = await client.openTickets();
      return tickets.find((t) => t.project_id === projectId) ?? null;
    });
    const paused = await client.getProject(projectId);
    expect(paused.status).toBe("active");
    expect(paused.paused).toBe(true);

    const answered = await client.answerTicket(ticket.id, "practitioners");
    expect(answered.state).toBe("answered");

    const finished = await waitFor(async () => {
      const view = await client.getProject(projectId);
      return view.status === "completed" ? view : null;
    });
    expect(finished.paused).toBe(false);
    expect(finished.latest_score).toBe(92);
  });

  it("enables promote only on completed projects, and promotes through the API", async () => {
    const projectId = await startProject(scenario("plain"), "plain source notes");
    const view = await waitFor(async () => {
      const v = await client.getProject(projectId);
      return v.status === "completed" ? v : null;
    });

    const { documents } = await client.listDocuments("draft");
    const latest = documents
      .filter((d) => d.metadata.project_id === projectId)
      .sort((a, b) => (a.metadata.iteration ?? 0) - (b.metadata.iteration ?? 0))
      .at(-1)!;
    const full = await client.getDocument(latest.id);
    const model = buildReviewPanel(view, documents, full);
    expect(model.controls).toEqual({ promoteEnabled: true, abortEnabled: false });

    // the enabled control corresponds to a call the server accepts
    const promoted = await client.promoteDocument(model.draft!.id, "candidate");
    expect(promoted.visibility).toBe("candidate");
    const listing = await client.listDocuments("candidate");
    expect(listing.documents.some((d) => d.id === model.draft!.id)).toBe(true);
  });

  it("enables abort only while active, and the click round-trips", async () => {
    const stuck = scenario("stuck", {
      Concierge: [{ type: "clarification_request", question: "hold here" }],
    });
    const projectId = await startProject(stuck, "plain source notes");
    await waitFor(async () => {
      const { tickets } = await client.openTickets();
      return tickets.find((t) => t.project_id === projectId) ?? null;
    });

    const active = await client.getProject(projectId);
    expect(reviewControls(active.status)).toEqual({
      promoteEnabled: false,
      abortEnabled: true,
    });
    await client.abortProject(projectId, "operator cancelled");
    const aborted = await waitFor(async () => {
      const view = await client.getProject(projectId);
      return view.status === "aborted" ? view : null;
    });
    expect(reviewControls(aborted.status)).toEqual({
      promoteEnabled: false,
      abortEnabled: false,
    });
  });

  it("keeps candidate source content out of the critic feedback pane", async () => {
    const projectId = await startProject(scenario("compartmented"), SECRET);
    const view = await waitFor(async () => {
      const v = await client.getProject(projectId);
      return v.status === "completed" ? v : null;
    });

    const { documents } = await client.listDocuments("draft");
    const latest = documents
      .filter((d) => d.metadata.project_id === projectId)
      .sort((a, b) => (a.metadata.iteration ?? 0) - (b.metadata.iteration ?? 0))
      .at(-1)!;
    const full = await client.getDocument(latest.id);
    const model = buildReviewPanel(view, documents, full);
    const html = renderReviewPanel(model);

    expect(model.feedbackPane.length).toBeGreaterThan(0);
    expect(html).toContain("claim X has no source"); // feedback material shown
    expect(html).toContain("second draft body"); // draft material shown
    expect(html).not.toContain(SECRET); // candidate sources never rendered
    expect(html).toContain("[draft]");
    expect(html).toContain("[feedback]");
  });

  it("read-only fidelity: rendered numbers equal API fields", async () => {
    const projectId = await startProject(scenario("fidelity"), "plain source notes");
    const view = await waitFor(async () => {
      const v = await client.getProject(projectId);
      return v.status === "completed" ? v : null;
    });
    const model = buildReviewPanel(view, [], null);
    expect(model.costUsd).toBe(view.ledger.cost_usd);
    expect(model.rows.map((r) => r.score).filter((s) => s !== null)).toEqual(
      view.score_trace.map((s) => s.score),
    );
    expect(model.rows.map((r) => r.verdict)).toEqual(
      view.verdict_trace.map((v) => v.verdict),
    );
  });
});
