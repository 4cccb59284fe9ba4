// Thin typed client for the engine API. Errors surface as ApiError with
// the machine-readable diagnostics, which kidMessage turns into friendly
// words for the prompt overlays.

import type {
  DiagnosticDoc, LevelDoc, LevelSummary, ProgramDoc, ScoreDoc, TraceDoc,
} from "./types.js";

export class ApiError extends Error {
  constructor(readonly status: number, readonly diagnostics: DiagnosticDoc[]) {
    super(diagnostics.map((d) => d.code).join(", ") || `HTTP ${status}`);
  }
}

async function request<T>(path: string, init?: RequestInit): Promise<T> {
  const resp = await fetch(path, init);
  if (!resp.ok) {
    let diagnostics: DiagnosticDoc[] = [];
    try {
      diagnostics = (await resp.json()).diagnostics ?? [];
    } catch {
      // non-JSON error body; status alone will have to do
    }
    throw new ApiError(resp.status, diagnostics);
  }
  return (await resp.json()) as T;
}

function post<T>(path: string, body: unknown): Promise<T> {
  return request<T>(path, {
    method: "POST",
    headers: { "content-type": "application/json" },
    body: JSON.stringify(body),
  });
}

export const api = {
  listLevels: () => request<LevelSummary[]>("/api/levels"),
  getLevel: (id: string) => request<LevelDoc>(`/api/levels/${id}`),
  saveLevel: (level: LevelDoc) => post<{ id: string }>("/api/levels", level),
  score: (levelRef: { level_id: string } | { level: LevelDoc },
          program: ProgramDoc, elapsedSeconds: number) =>
    post<{ trace: TraceDoc; score: ScoreDoc }>("/api/score", {
      ...levelRef,
      program,
      elapsed_seconds: elapsedSeconds,
    }),
  exportText: (program: ProgramDoc, target: "pseudocode" | "touchdevelop") =>
    post<{ text: string }>("/api/export", { program, target }),
};

const FRIENDLY: Record<string, string> = {
  E_UNSOLVABLE: "this maze can't be solved — open a path!",
  E_MOVE_RANGE: "moves must be 1 to 99 squares",
  E_LOOP_RANGE: "repeats must run 1 to 99 times",
  E_MOVE_OOB: "that move is longer than the whole maze",
  E_DEPTH: "those blocks are nested too deep",
  E_SIZE: "that program is too long",
  E_NOT_FOUND: "that level has gone missing",
  E_TIME: "the timer looks wrong — try again",
};

export function kidMessage(error: unknown): string {
  if (error instanceof ApiError) {
    for (const d of error.diagnostics) {
      const friendly = FRIENDLY[d.code];
      if (friendly) return friendly;
    }
    if (error.diagnostics.length > 0) return error.diagnostics[0].message;
    return "the game hit a snag — try again";
  }
  return "can't reach the game server";
}
