// Session state: which screen is up, the level being played, the working
// program, the authoring timer and the last run. One instance per page.

import { Playback } from "./playback.js";
import { ProgramBuilder } from "./program.js";
import type { LevelDoc, ScoreDoc, TraceDoc } from "./types.js";

export type Mode = "build" | "playback" | "score" | "editor";

export class Session {
  mode: Mode = "build";
  level: LevelDoc | null = null;
  levelId: string | null = null; // null for editor drafts played inline
  builder = new ProgramBuilder();
  playback: Playback | null = null;
  score: ScoreDoc | null = null;
  cursor = 0;
  playing = false;
  stepsPerSecond = 4;
  private openedAt = 0;

  constructor(private readonly now: () => number = () => Date.now()) {}

  /** Opening a level is the only thing that resets the authoring timer. */
  openLevel(level: LevelDoc, levelId: string | null): void {
    this.level = level;
    this.levelId = levelId;
    this.builder.clear();
    this.playback = null;
    this.score = null;
    this.cursor = 0;
    this.playing = false;
    this.mode = "build";
    this.openedAt = this.now();
  }

  elapsedSeconds(): number {
    return Math.max(0, (this.now() - this.openedAt) / 1000);
  }

  startPlayback(trace: TraceDoc, score: ScoreDoc): void {
    if (!this.level) throw new Error("no level open");
    this.playback = new Playback(this.level, trace);
    this.score = score;
    this.cursor = 0;
    this.playing = true;
    this.mode = "playback";
  }

  backToBuild(): void {
    this.mode = "build";
    this.playing = false;
  }
}
