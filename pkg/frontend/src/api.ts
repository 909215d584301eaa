/** Typed client over the engine's REST endpoints. The console never talks
 * to anything else: every number rendered comes from these calls. */

import type {
  ClarificationTicket,
  DocumentFull,
  DocumentSummary,
  EventRecord,
  ProjectView,
} from "./types.js";

export class ApiError extends Error {
  constructor(
    public status: number,
    public detail: string,
  ) {
    super(`HTTP ${status}: ${detail}`);
  }
}

async function request<T>(base: string, path: string, init?: RequestInit): Promise<T> {
  const response = await fetch(base + path, {
    headers: { "content-type": "application/json" },
    ...init,
  });
  if (!response.ok) {
    let detail = response.statusText;
    try {
      const body = (await response.json()) as { detail?: string };
      if (body.detail) detail = body.detail;
    } catch {
      // non-JSON error body; keep the status text
    }
    throw new ApiError(response.status, detail);
  }
  return (await response.json()) as T;
}

export class EngineClient {
  constructor(public base: string) {}

  listProjects(): Promise<{ projects: ProjectView[] }> {
    return request(this.base, "/projects");
  }

  getProject(projectId: string): Promise<ProjectView> {
    return request(this.base, `/projects/${projectId}`);
  }

  getProjectEvents(projectId: string): Promise<{ events: EventRecord[] }> {
    return request(this.base, `/projects/${projectId}/events`);
  }

  abortProject(projectId: string, reason: string): Promise<{ status: string }> {
    return request(this.base, `/projects/${projectId}/abort`, {
      method: "POST",
      body: JSON.stringify({ reason }),
    });
  }

  listDocuments(visibility?: string): Promise<{ documents: DocumentSummary[] }> {
    const query = visibility ? `?visibility=${visibility}` : "";
    return request(this.base, `/documents${query}`);
  }

  getDocument(docId: string): Promise<DocumentFull> {
    return request(this.base, `/documents/${docId}`);
  }

  promoteDocument(docId: string, to: string): Promise<{ id: string; visibility: string }> {
    return request(this.base, `/documents/${docId}/promote`, {
      method: "POST",
      body: JSON.stringify({ to }),
    });
  }

  openTickets(): Promise<{ tickets: ClarificationTicket[] }> {
    return request(this.base, "/clarifications?state=open");
  }

  answerTicket(ticketId: string, answer: string): Promise<ClarificationTicket> {
    return request(this.base, `/clarifications/${ticketId}/answer`, {
      method: "POST",
      body: JSON.stringify({ answer }),
    });
  }

  metrics(): Promise<Record<string, unknown>> {
    return request(this.base, "/metrics");
  }

  /** Per-project SSE stream of event-log records; falls back silently if
   * EventSource is unavailable (the poller keeps running regardless). */
  streamEvents(projectId: string, onEvent: (record: EventRecord) => void): (() => void) | null {
    if (typeof EventSource === "undefined") return null;
    const source = new EventSource(`${this.base}/projects/${projectId}/stream`);
    source.onmessage = (message) => {
      onEvent(JSON.parse(message.data) as EventRecord);
    };
    return () => source.close();
  }
}
