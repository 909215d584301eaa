/** Payload shapes of the engine's REST API, as consumed by the console. */

export type ProjectStatus = "active" | "completed" | "failed" | "aborted";

export interface TraceEntry {
  iteration: number;
  score?: number;
  verdict?: string;
}

export interface TokenLedger {
  input_tokens: number;
  output_tokens: number;
  cached_input_tokens: number;
  cost_usd: number;
}

export interface FeedbackEntry {
  iteration: number;
  source: string;
  text: string;
}

export interface ProjectView {
  project_id: string;
  status: ProjectStatus;
  paused: boolean;
  iteration: number;
  remit: string;
  route: string | null;
  finish_reason: string | null;
  verdict_trace: { iteration: number; verdict: string }[];
  score_trace: { iteration: number; score: number }[];
  feedback_log: FeedbackEntry[];
  ledger: TokenLedger;
  latest_score: number | null;
  latest_verdict: string | null;
}

export interface DocumentMetadata {
  source_type: string;
  classification: string;
  authorship: string;
  created_at: number;
  updated_at: number;
  keywords: string[];
  group: string;
  project_id: string | null;
  iteration: number | null;
  verdict: string | null;
  critic_score: number | null;
}

export interface DocumentSummary {
  id: string;
  title: string;
  visibility: string;
  metadata: DocumentMetadata;
}

export interface DocumentFull extends Omit<DocumentSummary, "visibility"> {
  visibility: string;
  content: string;
}

export interface ClarificationTicket {
  id: string;
  project_id: string;
  question: string;
  answer: string | null;
  state: "open" | "answered";
}

export interface EventRecord {
  seq: number;
  timestamp: number;
  kind: string;
  actor: string;
  doc_id: string | null;
  detail: Record<string, unknown>;
}
