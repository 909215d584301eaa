/** Pure presentation logic: everything here is a function of API payloads,
 * so the console can be tested without a browser. No client-side
 * recomputation of engine state beyond display formatting. */

import type { DocumentFull, DocumentSummary, ProjectStatus, ProjectView } from "./types.js";

export const STATUS_ORDER: ProjectStatus[] = ["active", "completed", "failed", "aborted"];

export interface StatusGroup {
  status: ProjectStatus;
  projects: ProjectView[];
  count: number;
  percentage: number;
}

/** Group the project listing by status with counts and one-decimal
 * percentages; every status appears, including empty ones. */
export function groupProjects(projects: ProjectView[]): StatusGroup[] {
  const total = projects.length;
  return STATUS_ORDER.map((status) => {
    const members = projects.filter((p) => p.status === status);
    return {
      status,
      projects: members,
      count: members.length,
      percentage: total === 0 ? 0 : Math.round((members.length / total) * 1000) / 10,
    };
  });
}

const SPARK_BLOCKS = "▁▂▃▄▅▆▇█";

/** Unicode sparkline of a 0-100 score trace. */
export function sparkline(scores: number[]): string {
  return scores
    .map((score) => {
      const clamped = Math.max(0, Math.min(100, score));
      const index = Math.min(SPARK_BLOCKS.length - 1, Math.floor(clamped / 12.5));
      return SPARK_BLOCKS[index];
    })
    .join("");
}

export interface ReviewControls {
  promoteEnabled: boolean;
  abortEnabled: boolean;
}

/** Control gating mirrors the server state machine: promote only once the
 * run completed, abort only while it is active. */
export function reviewControls(status: ProjectStatus): ReviewControls {
  return {
    promoteEnabled: status === "completed",
    abortEnabled: status === "active",
  };
}

export interface TraceRow {
  iteration: number;
  verdict: string | null;
  score: number | null;
}

export function traceRows(view: ProjectView): TraceRow[] {
  const scores = new Map(view.score_trace.map((s) => [s.iteration, s.score]));
  return view.verdict_trace.map((v) => ({
    iteration: v.iteration,
    verdict: v.verdict,
    score: scores.get(v.iteration) ?? null,
  }));
}

export interface ReviewPanelModel {
  projectId: string;
  status: ProjectStatus;
  controls: ReviewControls;
  /** Latest DRAFT document of this project, labelled with its visibility. */
  draft: { id: string; title: string; iteration: number | null; visibility: string; content: string } | null;
  /** Feedback pane: Critic/Corroborator feedback beside DRAFT/FEEDBACK
   * material only — CANDIDATE source text never enters this model. */
  feedbackPane: { label: string; text: string }[];
  rows: TraceRow[];
  costUsd: number;
}

export function buildReviewPanel(
  view: ProjectView,
  draftListing: DocumentSummary[],
  draftDocument: DocumentFull | null,
): ReviewPanelModel {
  const mine = draftListing
    .filter((d) => d.metadata.project_id === view.project_id)
    .sort((a, b) => (a.metadata.iteration ?? 0) - (b.metadata.iteration ?? 0));
  const latest = mine[mine.length - 1] ?? null;
  const draft =
    latest && draftDocument && draftDocument.id === latest.id
      ? {
          id: latest.id,
          title: latest.title,
          iteration: latest.metadata.iteration,
          visibility: "draft",
          content: draftDocument.content,
        }
      : null;
  const feedbackPane = view.feedback_log.map((entry) => ({
    label: `feedback · iteration ${entry.iteration} · ${entry.source}`,
    text: entry.text,
  }));
  return {
    projectId: view.project_id,
    status: view.status,
    controls: reviewControls(view.status),
    draft,
    feedbackPane,
    rows: traceRows(view),
    costUsd: view.ledger.cost_usd,
  };
}

// --- HTML rendering ----------------------------------------------------

export function escapeHtml(text: string): string {
  return text
    .replaceAll("&", "&amp;")
    .replaceAll("<", "&lt;")
    .replaceAll(">", "&gt;")
    .replaceAll('"', "&quot;");
}

export function renderDashboard(groups: StatusGroup[]): string {
  const total = groups.reduce((n, g) => n + g.count, 0);
  if (total === 0) {
    return `<p class="empty">No projects yet. Counts are all zero.</p>`;
  }
  const sections = groups.map((group) => {
    const items = group.projects
      .map(
        (p) => `
        <li>
          <a href="#/project/${p.project_id}"><code>${p.project_id}</code></a>
          <span class="iter">iter ${p.iteration}</span>
          <span class="verdict">${p.latest_verdict ?? "—"}</span>
          <span class="score">${p.latest_score ?? "—"}</span>
          <span class="spark">${sparkline(p.score_trace.map((s) => s.score))}</span>
          <span class="cost">$${p.ledger.cost_usd.toFixed(4)}</span>
          ${p.paused ? '<span class="paused">paused</span>' : ""}
        </li>`,
      )
      .join("");
    return `
      <section class="status-group" data-status="${group.status}">
        <h3>${group.status} <span class="count">${group.count}</span>
            <span class="pct">${group.percentage.toFixed(1)}%</span></h3>
        <ul>${items}</ul>
      </section>`;
  });
  return sections.join("\n");
}

export function renderReviewPanel(model: ReviewPanelModel): string {
  const rows = model.rows
    .map(
      (row) =>
        `<tr><td>${row.iteration}</td><td>${row.verdict ?? "—"}</td><td>${row.score ?? "—"}</td></tr>`,
    )
    .join("");
  const draft = model.draft
    ? `<article class="draft" data-visibility="${model.draft.visibility}">
         <h4>${escapeHtml(model.draft.title)}
             <span class="vis-label">[${model.draft.visibility}]</span></h4>
         <pre>${escapeHtml(model.draft.content)}</pre>
       </article>`
    : `<p class="empty">No draft yet.</p>`;
  const feedback = model.feedbackPane
    .map(
      (entry) =>
        `<article class="feedback" data-visibility="feedback">
           <h5>${escapeHtml(entry.label)} <span class="vis-label">[feedback]</span></h5>
           <pre>${escapeHtml(entry.text)}</pre>
         </article>`,
    )
    .join("");
  return `
    <section class="review" data-project="${model.projectId}">
      <h3><code>${model.projectId}</code> — ${model.status}</h3>
      <p class="cost">cost so far: $${model.costUsd.toFixed(4)}</p>
      <table class="trace"><thead><tr><th>iter</th><th>verdict</th><th>score</th></tr></thead>
        <tbody>${rows}</tbody></table>
      ${draft}
      <section class="feedback-pane">${feedback || '<p class="empty">No feedback recorded.</p>'}</section>
      <button class="promote" ${model.controls.promoteEnabled ? "" : "disabled"}>Promote</button>
      <button class="abort" ${model.controls.abortEnabled ? "" : "disabled"}>Abort</button>
    </section>`;
}

export function renderInbox(
  tickets: { id: string; project_id: string; question: string }[],
): string {
  if (tickets.length === 0) {
    return `<p class="empty">No open clarifications.</p>`;
  }
  return tickets
    .map(
      (ticket) => `
      <form class="ticket" data-ticket="${ticket.id}">
        <p><code>${ticket.project_id}</code> asks: ${escapeHtml(ticket.question)}</p>
        <input name="answer" placeholder="answer" required>
        <button type="submit">Answer</button>
      </form>`,
    )
    .join("\n");
}
