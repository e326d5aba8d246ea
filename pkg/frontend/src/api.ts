// Thin typed client for the debug-asp JSON API.

import type { ApiError, Explanation, SessionCreated } from "./types.js";

export class ApiRequestError extends Error {
  constructor(
    readonly status: number,
    readonly payload: ApiError | null,
  ) {
    super(payload?.error?.message ?? payload?.error?.kind ?? `HTTP ${status}`);
  }
}

async function request<T>(base: string, path: string, init?: RequestInit): Promise<T> {
  const resp = await fetch(`${base}${path}`, {
    headers: { "content-type": "application/json" },
    ...init,
  });
  if (!resp.ok) {
    let payload: ApiError | null = null;
    try {
      payload = (await resp.json()) as ApiError;
    } catch {
      payload = null;
    }
    throw new ApiRequestError(resp.status, payload);
  }
  return (await resp.json()) as T;
}

export class Client {
  constructor(readonly base: string = "") {}

  health(): Promise<{ status: string }> {
    return request(this.base, "/health");
  }

  createSession(programText: string): Promise<SessionCreated> {
    return request(this.base, "/sessions", {
      method: "POST",
      body: JSON.stringify({ program_text: programText }),
    });
  }

  putInterpretation(sessionId: string, literals: string[]): Promise<{ ok: boolean; literals: string[] }> {
    return request(this.base, `/sessions/${sessionId}/interpretation`, {
      method: "PUT",
      body: JSON.stringify({ literals }),
    });
  }

  explain(sessionId: string, opts: { minimalLoops?: boolean; first?: boolean } = {}): Promise<Explanation> {
    return request(this.base, `/sessions/${sessionId}/explain`, {
      method: "POST",
      body: JSON.stringify({
        minimal_loops: Boolean(opts.minimalLoops),
        first: Boolean(opts.first),
      }),
    });
  }

  answerSets(sessionId: string, limit = 20): Promise<{ answer_sets: string[][] }> {
    return request(this.base, `/sessions/${sessionId}/answer-sets?limit=${limit}`);
  }
}
