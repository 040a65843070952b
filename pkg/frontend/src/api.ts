// Typed client for the resolution session service. The UI never computes
// measure values itself: every number shown comes from these payloads.

export type Label = "in" | "out" | "undec";
export type Answer = "in" | "out";
export type GraphFormat = "tgf" | "apx" | "inst";

export interface FractionValue {
  num: number;
  den: number;
  approx: number;
}

export interface GraphShape {
  nodes: string[];
  arcs: [string, string][];
}

export interface HistoryEntry {
  step: number;
  query: string;
  answer: Answer;
  measures: Record<string, FractionValue>;
}

export interface TrajectoryPoint {
  step: number;
  measures: Record<string, FractionValue>;
}

export interface SessionState {
  id: string;
  version: number;
  graph: GraphShape;
  labelling: Record<string, Label>;
  reduced_graph: GraphShape;
  measures: Record<string, FractionValue>;
  committed: boolean;
  undecided: string[];
  history: HistoryEntry[];
  trajectory: TrajectoryPoint[];
}

export interface Candidate {
  argument: string;
  value_if_in: FractionValue;
  value_if_out: FractionValue;
  expected_reduction: FractionValue;
}

export interface Recommendation extends Candidate {
  measure: string;
  candidates: Candidate[];
}

export class ServiceError extends Error {
  constructor(public status: number, detail: string) {
    super(detail);
  }
}

export function formatFraction(value: FractionValue): string {
  return value.den === 1 ? `${value.num}` : `${value.num}/${value.den}`;
}

export class ApiClient {
  constructor(private readonly baseUrl: string) {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const response = await fetch(`${this.baseUrl}${path}`, {
      headers: { "Content-Type": "application/json" },
      ...init,
    });
    const body = await response.json().catch(() => ({}));
    if (!response.ok) {
      const detail =
        typeof body === "object" && body !== null && "detail" in body
          ? String((body as { detail: unknown }).detail)
          : `service error ${response.status}`;
      throw new ServiceError(response.status, detail);
    }
    return body as T;
  }

  createSession(
    document: string,
    format: GraphFormat,
    measures: string[],
  ): Promise<SessionState> {
    return this.request<SessionState>("/sessions", {
      method: "POST",
      body: JSON.stringify({ document, format, measures }),
    });
  }

  getSession(id: string): Promise<SessionState> {
    return this.request<SessionState>(`/sessions/${id}`);
  }

  answer(id: string, argument: string, answer: Answer): Promise<SessionState> {
    return this.request<SessionState>(`/sessions/${id}/answers`, {
      method: "POST",
      body: JSON.stringify({ argument, answer }),
    });
  }

  undo(id: string): Promise<SessionState> {
    return this.request<SessionState>(`/sessions/${id}/undo`, { method: "POST" });
  }

  recommendation(id: string, measure: string): Promise<Recommendation> {
    const query = encodeURIComponent(measure);
    return this.request<Recommendation>(`/sessions/${id}/recommendation?measure=${query}`);
  }
}
