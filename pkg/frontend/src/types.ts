// Wire types mirroring the engine API documents.

export type Facing = "N" | "E" | "S" | "W";

export interface CellDoc {
  x: number;
  y: number;
}

export interface LevelDoc {
  id?: string;
  name?: string;
  width: number;
  height: number;
  start: { x: number; y: number; facing: Facing };
  goal: CellDoc;
  walls: CellDoc[];
}

export interface LevelSummary {
  id: string;
  name: string;
  width: number;
  height: number;
  shortest: number;
}

export type CondDoc =
  | { c: "ahead_clear" | "left_clear" | "right_clear" | "at_goal" }
  | { c: "not"; inner: CondDoc };

export type StatementDoc =
  | { t: "move"; n: number; id: number }
  | { t: "left"; id: number }
  | { t: "right"; id: number }
  | { t: "repeat"; n: number; id: number; body: StatementDoc[] }
  | { t: "while"; cond: CondDoc; id: number; body: StatementDoc[] }
  | { t: "if"; cond: CondDoc; id: number; then: StatementDoc[]; else: StatementDoc[] };

export interface ProgramDoc {
  body: StatementDoc[];
}

export type TraceEventDoc =
  | { e: "enter"; id: number }
  | { e: "moved"; from: CellDoc; to: CellDoc; facing: Facing }
  | { e: "turned"; id: number; from: Facing; to: Facing }
  | { e: "cond"; id: number; value: boolean }
  | { e: "crashed"; at: CellDoc; attempted: CellDoc }
  | { e: "goal"; at: CellDoc }
  | { e: "limit" };

export interface TraceDoc {
  outcome: "goal" | "crash" | "step_limit" | "ended";
  final: { x: number; y: number; facing: Facing };
  steps: number;
  events: TraceEventDoc[];
}

export interface ScoreDoc {
  completion: number;
  constructs: number;
  brevity: number;
  speed: number;
  total: number;
  statements: number;
  kinds: string[];
}

export interface DiagnosticDoc {
  code: string;
  message: string;
  statement_id?: number;
  span?: [number, number];
}
