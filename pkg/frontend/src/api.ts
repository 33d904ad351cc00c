/** Thin typed client over the play service's HTTP+JSON contract. */

import type {
  ApiErrorBody,
  Hint,
  PlayerName,
  SessionView,
  StrategyInfo,
} from "./types.js";

export class ApiError extends Error {
  constructor(
    public readonly status: number,
    public readonly code: string,
    message: string,
  ) {
    super(message);
  }
}

export type FetchLike = (
  input: string,
  init?: RequestInit,
) => Promise<Response>;

export interface NewGameRequest {
  graph: string;
  humanRole: PlayerName;
  firstPlayer: PlayerName;
  engine: string;
}

export class ApiClient {
  constructor(
    private readonly base: string = "",
    private readonly fetchFn: FetchLike = (input, init) => fetch(input, init),
  ) {}

  private async request<T>(
    method: string,
    path: string,
    body?: unknown,
  ): Promise<T> {
    const init: RequestInit = { method };
    if (body !== undefined) {
      init.headers = { "Content-Type": "application/json" };
      init.body = JSON.stringify(body);
    }
    const res = await this.fetchFn(this.base + path, init);
    const payload = await res.json();
    if (!res.ok) {
      const err = payload as ApiErrorBody;
      throw new ApiError(
        res.status,
        err.code ?? "unknown",
        err.message ?? res.statusText,
      );
    }
    return payload as T;
  }

  createSession(req: NewGameRequest): Promise<SessionView> {
    return this.request("POST", "/sessions", req);
  }

  getSession(id: string): Promise<SessionView> {
    return this.request("GET", `/sessions/${id}`);
  }

  playMove(id: string, vertex: number): Promise<SessionView> {
    return this.request("POST", `/sessions/${id}/moves`, { vertex });
  }

  undo(id: string): Promise<SessionView> {
    return this.request("POST", `/sessions/${id}/undo`);
  }

  hint(id: string): Promise<Hint> {
    return this.request("GET", `/sessions/${id}/hint`);
  }

  strategies(graphExpr: string): Promise<StrategyInfo[]> {
    return this.request(
      "GET",
      `/strategies?graph=${encodeURIComponent(graphExpr)}`,
    );
  }
}
