// The working program: a tree of statement documents plus an insertion
// point, built one button tap at a time. Every mutation is validated here
// with the same limits the engine enforces, so nothing the UI can build is
// ever rejected by the server with a range diagnostic.

import { MAX_COUNT, MAX_DEPTH, MAX_NOT_DEPTH, MAX_STATEMENTS, MIN_COUNT } from "./limits.js";
import type { CondDoc, ProgramDoc, StatementDoc } from "./types.js";

export type Sensor = "ahead_clear" | "left_clear" | "right_clear" | "at_goal";

export function makeCond(sensor: Sensor, nots: number): CondDoc {
  let cond: CondDoc = { c: sensor };
  for (let i = 0; i < Math.min(nots, MAX_NOT_DEPTH); i++) {
    cond = { c: "not", inner: cond };
  }
  return cond;
}

export const SENSOR_PHRASES: Record<Sensor, string> = {
  ahead_clear: "path ahead is clear",
  left_clear: "path to the left is clear",
  right_clear: "path to the right is clear",
  at_goal: "robot is at the goal",
};

export function condPhrase(cond: CondDoc): string {
  if (cond.c === "not") return "not " + condPhrase(cond.inner);
  return SENSOR_PHRASES[cond.c];
}

/** One line of the command queue panel. Rows for statements carry the
 * statement id used for playback highlighting; bracket-closing rows and
 * the insertion marker carry null. */
export interface QueueRow {
  id: number | null;
  depth: number;
  text: string;
  closes: boolean;
  marker: boolean;
}

interface Container {
  block: StatementDoc[];
  owner: StatementDoc | null; // null for the program body
}

export class ProgramBuilder {
  readonly body: StatementDoc[] = [];
  private stack: Container[] = [{ block: this.body, owner: null }];

  /** Nesting depth a newly added statement would get (top level = 1). */
  insertionDepth(): number {
    return this.stack.length;
  }

  statementCount(): number {
    let count = 0;
    const visit = (block: StatementDoc[]) => {
      for (const stmt of block) {
        count++;
        if (stmt.t === "repeat" || stmt.t === "while") visit(stmt.body);
        if (stmt.t === "if") {
          visit(stmt.then);
          visit(stmt.else);
        }
      }
    };
    visit(this.body);
    return count;
  }

  isEmpty(): boolean {
    return this.body.length === 0;
  }

  private roomForOneMore(): string | null {
    if (this.statementCount() >= MAX_STATEMENTS) {
      return `that's the limit — a program can have at most ${MAX_STATEMENTS} commands`;
    }
    return null;
  }

  private checkCount(n: number, what: string): string | null {
    if (!Number.isInteger(n) || n < MIN_COUNT || n > MAX_COUNT) {
      return `${what} must be a whole number from ${MIN_COUNT} to ${MAX_COUNT}`;
    }
    return null;
  }

  private append(stmt: StatementDoc): void {
    this.stack[this.stack.length - 1].block.push(stmt);
  }

  addMove(n: number): string | null {
    const bad = this.checkCount(n, "how many squares") ?? this.roomForOneMore();
    if (bad) return bad;
    this.append({ t: "move", n, id: 0 });
    return null;
  }

  addTurn(dir: "left" | "right"): string | null {
    const bad = this.roomForOneMore();
    if (bad) return bad;
    this.append({ t: dir, id: 0 });
    return null;
  }

  private openBlock(stmt: StatementDoc, block: StatementDoc[]): void {
    this.append(stmt);
    this.stack.push({ block, owner: stmt });
  }

  private checkNesting(): string | null {
    // children of a new block would sit one level deeper
    if (this.insertionDepth() >= MAX_DEPTH) {
      return `blocks can only nest ${MAX_DEPTH} levels deep`;
    }
    return null;
  }

  openRepeat(n: number): string | null {
    const bad = this.checkCount(n, "how many times")
      ?? this.checkNesting() ?? this.roomForOneMore();
    if (bad) return bad;
    const stmt: StatementDoc = { t: "repeat", n, id: 0, body: [] };
    this.openBlock(stmt, stmt.body);
    return null;
  }

  openWhile(cond: CondDoc): string | null {
    const bad = this.checkNesting() ?? this.roomForOneMore();
    if (bad) return bad;
    const stmt: StatementDoc = { t: "while", cond, id: 0, body: [] };
    this.openBlock(stmt, stmt.body);
    return null;
  }

  openIf(cond: CondDoc): string | null {
    const bad = this.checkNesting() ?? this.roomForOneMore();
    if (bad) return bad;
    const stmt: StatementDoc = { t: "if", cond, id: 0, then: [], else: [] };
    this.openBlock(stmt, stmt.then);
    return null;
  }

  /** Switch from building an if's then-branch to its else-branch. */
  beginElse(): string | null {
    const top = this.stack[this.stack.length - 1];
    if (!top.owner || top.owner.t !== "if" || top.block !== top.owner.then) {
      return "otherwise only works right after an if block";
    }
    this.stack[this.stack.length - 1] = { block: top.owner.else, owner: top.owner };
    return null;
  }

  insideIfThen(): boolean {
    const top = this.stack[this.stack.length - 1];
    return top.owner?.t === "if" && top.block === top.owner.then;
  }

  inBlock(): boolean {
    return this.stack.length > 1;
  }

  closeBlock(): string | null {
    if (this.stack.length === 1) return "you're not inside a block";
    this.stack.pop();
    return null;
  }

  /** Remove the most recent command in the open block; on an empty block,
   * remove the block statement itself. */
  deleteLast(): void {
    const top = this.stack[this.stack.length - 1];
    if (top.block.length > 0) {
      top.block.pop();
      return;
    }
    if (top.owner) {
      this.stack.pop();
      const parent = this.stack[this.stack.length - 1];
      const at = parent.block.indexOf(top.owner);
      if (at >= 0) parent.block.splice(at, 1);
    }
  }

  clear(): void {
    this.body.length = 0;
    this.stack = [{ block: this.body, owner: null }];
  }

  /** Assign pre-order ids (0, 1, 2, ... depth-first, then-branch before
   * else), exactly the numbering the engine uses. */
  renumber(): void {
    let next = 0;
    const visit = (block: StatementDoc[]) => {
      for (const stmt of block) {
        stmt.id = next++;
        if (stmt.t === "repeat" || stmt.t === "while") visit(stmt.body);
        if (stmt.t === "if") {
          visit(stmt.then);
          visit(stmt.else);
        }
      }
    };
    visit(this.body);
  }

  toDoc(): ProgramDoc {
    this.renumber();
    return { body: this.body };
  }

  /** Flatten for the queue panel: nested statements indented, blocks
   * closed by bracket rows, with the insertion marker in the open block. */
  rows(): QueueRow[] {
    this.renumber();
    const out: QueueRow[] = [];
    const open = this.stack[this.stack.length - 1];

    const emitBlock = (block: StatementDoc[], depth: number) => {
      for (const stmt of block) emit(stmt, depth);
      if (block === open.block) {
        out.push({ id: null, depth, text: "tap a command…", closes: false, marker: true });
      }
    };

    const emit = (stmt: StatementDoc, depth: number) => {
      const row = (text: string) =>
        out.push({ id: stmt.id, depth, text, closes: false, marker: false });
      switch (stmt.t) {
        case "move":
          row(`go straight ${stmt.n}`);
          break;
        case "left":
          row("turn left");
          break;
        case "right":
          row("turn right");
          break;
        case "repeat":
          row(`repeat ${stmt.n} times`);
          emitBlock(stmt.body, depth + 1);
          out.push({ id: null, depth, text: "end repeat", closes: true, marker: false });
          break;
        case "while":
          row(`while ${condPhrase(stmt.cond)}`);
          emitBlock(stmt.body, depth + 1);
          out.push({ id: null, depth, text: "end while", closes: true, marker: false });
          break;
        case "if":
          row(`if ${condPhrase(stmt.cond)}`);
          emitBlock(stmt.then, depth + 1);
          if (stmt.else.length > 0 || (open.owner === stmt && open.block === stmt.else)) {
            out.push({ id: null, depth, text: "otherwise", closes: false, marker: false });
            emitBlock(stmt.else, depth + 1);
          }
          out.push({ id: null, depth, text: "end if", closes: true, marker: false });
          break;
      }
    };

    emitBlock(this.body, 0);
    return out;
  }
}
