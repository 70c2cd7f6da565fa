// REST client for the session service.

export type Source = "KB" | "TEXT" | "TABLE" | "INFO";

export interface CfgNode {
  id: string;
  turn: number;
  role: "question" | "answer";
  text: string;
}

export interface CfgEdge {
  source: string;
  target: string;
  words: string[];
}

export interface Cfg {
  nodes: CfgNode[];
  edges: CfgEdge[];
  self_sufficient: boolean;
}

export interface EvidenceView {
  rank: number;
  score: number;
  source: Source;
  text: string;
  id: string;
  provenance: unknown[];
}

export interface TurnPayload {
  turn: number;
  question: string;
  answer: string;
  normalized: unknown;
  sr: string;
  cfg: Cfg;
  evidences: EvidenceView[];
  total_evidences: number;
}

export interface SessionReplay {
  session_id: string;
  turns: TurnPayload[];
}

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly detail: unknown,
  ) {
    super(`server returned ${status}`);
  }
}

async function request<T>(url: string, init?: RequestInit): Promise<T> {
  const response = await fetch(url, {
    headers: { "Content-Type": "application/json" },
    ...init,
  });
  if (!response.ok) {
    let detail: unknown = null;
    try {
      detail = (await response.json())        /* JSON body if any */;
    } catch {
      detail = await response.text().catch(() => null);
    }
    throw new ApiError(response.status, detail);
  }
  return (await response.json()) as T;
}

export class SessionApi {
  constructor(
    readonly baseUrl: string,
    readonly evidencePage = 20,
  ) {}

  async createSession(): Promise<string> {
    const payload = await request<{ session_id: string }>(`${this.baseUrl}/sessions`, {
      method: "POST",
      body: "{}",
    });
    return payload.session_id;
  }

  ask(sessionId: string, question: string, srOverride?: string): Promise<TurnPayload> {
    const body: Record<string, unknown> = { question };
    if (srOverride !== undefined) body.sr_override = srOverride;
    return request<TurnPayload>(
      `${this.baseUrl}/sessions/${sessionId}/ask?evidences=${this.evidencePage}`,
      { method: "POST", body: JSON.stringify(body) },
    );
  }

  reaskTurn(sessionId: string, turn: number, srOverride: string): Promise<TurnPayload> {
    return request<TurnPayload>(
      `${this.baseUrl}/sessions/${sessionId}/ask?evidences=${this.evidencePage}`,
      { method: "POST", body: JSON.stringify({ sr_override: srOverride, turn }) },
    );
  }

  getSession(sessionId: string): Promise<SessionReplay> {
    return request<SessionReplay>(
      `${this.baseUrl}/sessions/${sessionId}?evidences=${this.evidencePage}`,
    );
  }

  async deleteSession(sessionId: string): Promise<void> {
    await request(`${this.baseUrl}/sessions/${sessionId}`, { method: "DELETE" });
  }
}
