/** Console bootstrap: hash routing, 1s polling with an SSE upgrade on the
 * project page, and strictly confirmation-first updates — nothing renders
 * until the server has answered. */

import { ApiError, EngineClient } from "./api.js";
import {
  buildReviewPanel,
  groupProjects,
  renderDashboard,
  renderInbox,
  renderReviewPanel,
} from "./present.js";
import type { DocumentFull } from "./types.js";

const POLL_INTERVAL_MS = 1000;

function el(id: string): HTMLElement {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing #${id}`);
  return node;
}

export class ConsoleApp {
  private client: EngineClient;
  private timer: number | null = null;
  private closeStream: (() => void) | null = null;
  private streamedProject: string | null = null;

  constructor(base: string) {
    this.client = new EngineClient(base);
  }

  start(): void {
    window.addEventListener("hashchange", () => void this.refresh());
    el("retry").addEventListener("click", () => void this.refresh());
    this.timer = window.setInterval(() => void this.refresh(), POLL_INTERVAL_MS);
    void this.refresh();
  }

  stop(): void {
    if (this.timer !== null) window.clearInterval(this.timer);
    this.closeStream?.();
  }

  private projectIdFromHash(): string | null {
    const match = window.location.hash.match(/^#\/project\/(.+)$/);
    return match ? match[1] : null;
  }

  private async refresh(): Promise<void> {
    try {
      const projectId = this.projectIdFromHash();
      if (projectId) {
        await this.renderProject(projectId);
      } else {
        this.dropStream();
        await this.renderHome();
      }
      el("offline").hidden = true;
    } catch (error) {
      // no cached ghost state: blank the view and show the banner
      el("main").innerHTML = "";
      el("offline").hidden = false;
      el("offline-detail").textContent =
        error instanceof Error ? error.message : String(error);
    }
  }

  private async renderHome(): Promise<void> {
    const [{ projects }, { tickets }] = await Promise.all([
      this.client.listProjects(),
      this.client.openTickets(),
    ]);
    el("main").innerHTML = `
      <h2>Projects</h2>
      ${renderDashboard(groupProjects(projects))}
      <h2>Clarification inbox</h2>
      ${renderInbox(tickets)}`;
    for (const form of document.querySelectorAll<HTMLFormElement>("form.ticket")) {
      form.addEventListener("submit", (event) => {
        event.preventDefault();
        const answer = (form.elements.namedItem("answer") as HTMLInputElement).value;
        void this.answer(form.dataset.ticket as string, answer);
      });
    }
  }

  private async answer(ticketId: string, answer: string): Promise<void> {
    try {
      await this.client.answerTicket(ticketId, answer);
    } catch (error) {
      if (error instanceof ApiError && error.status === 409) {
        window.alert("Already answered elsewhere.");
      } else {
        throw error;
      }
    }
    await this.refresh();
  }

  private async renderProject(projectId: string): Promise<void> {
    const view = await this.client.getProject(projectId);
    const { documents } = await this.client.listDocuments("draft");
    const mine = documents.filter((d) => d.metadata.project_id === projectId);
    let full: DocumentFull | null = null;
    if (mine.length > 0) {
      const latest = mine.reduce((a, b) =>
        (a.metadata.iteration ?? 0) >= (b.metadata.iteration ?? 0) ? a : b,
      );
      full = await this.client.getDocument(latest.id);
    }
    const model = buildReviewPanel(view, documents, full);
    el("main").innerHTML =
      `<p><a href="#/">&larr; all projects</a></p>` + renderReviewPanel(model);

    const promote = document.querySelector<HTMLButtonElement>("button.promote");
    promote?.addEventListener("click", () => {
      if (model.draft) void this.promote(model.draft.id);
    });
    const abort = document.querySelector<HTMLButtonElement>("button.abort");
    abort?.addEventListener("click", () => void this.abort(projectId));

    if (this.streamedProject !== projectId) {
      this.dropStream();
      this.closeStream = this.client.streamEvents(projectId, () => void this.refresh());
      this.streamedProject = projectId;
    }
  }

  private async promote(docId: string): Promise<void> {
    const to = window.prompt("Promote to (candidate/public):", "candidate");
    if (!to) return;
    await this.client.promoteDocument(docId, to);
    await this.refresh();
  }

  private async abort(projectId: string): Promise<void> {
    const reason = window.prompt("Abort reason:", "") ?? "";
    await this.client.abortProject(projectId, reason);
    await this.refresh();
  }

  private dropStream(): void {
    this.closeStream?.();
    this.closeStream = null;
    this.streamedProject = null;
  }
}

const base =
  new URLSearchParams(window.location.search).get("engine") ?? "http://127.0.0.1:8466";
new ConsoleApp(base).start();
