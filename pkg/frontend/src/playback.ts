// Pure playback over a complete trace: the cursor is "how many events have
// happened". Everything the animation needs — robot pose, which queue row
// to light up, terminal effects — is derived from the event prefix, so
// scrubbing backwards is just re-deriving from a smaller cursor.

import type { Facing, LevelDoc, TraceDoc, TraceEventDoc } from "./types.js";

export interface Pose {
  x: number;
  y: number;
  facing: Facing;
}

/** Events that cost a primitive step drive the pacing clock. */
export function isPrimitive(event: TraceEventDoc): boolean {
  return event.e === "moved" || event.e === "turned" || event.e === "cond";
}

/** Statement id the queue should highlight once this event has happened. */
export function highlightTarget(event: TraceEventDoc): number | null {
  if (event.e === "enter" || event.e === "turned" || event.e === "cond") {
    return event.id;
  }
  return null;
}

export class Playback {
  readonly length: number;

  constructor(readonly level: LevelDoc, readonly trace: TraceDoc) {
    this.length = trace.events.length;
  }

  clamp(cursor: number): number {
    return Math.max(0, Math.min(this.length, Math.floor(cursor)));
  }

  /** Most recent highlight-bearing event at or before the cursor. */
  highlightAt(cursor: number): number | null {
    cursor = this.clamp(cursor);
    for (let i = cursor - 1; i >= 0; i--) {
      const target = highlightTarget(this.trace.events[i]);
      if (target !== null) return target;
    }
    return null;
  }

  /** Robot pose after the first `cursor` events, replayed from the start. */
  poseAt(cursor: number): Pose {
    cursor = this.clamp(cursor);
    const pose: Pose = {
      x: this.level.start.x,
      y: this.level.start.y,
      facing: this.level.start.facing,
    };
    for (let i = 0; i < cursor; i++) {
      const event = this.trace.events[i];
      if (event.e === "moved") {
        pose.x = event.to.x;
        pose.y = event.to.y;
        pose.facing = event.facing;
      } else if (event.e === "turned") {
        pose.facing = event.to;
      }
    }
    return pose;
  }

  /** The terminal event once the cursor has consumed it, else null. */
  terminalAt(cursor: number): TraceEventDoc | null {
    cursor = this.clamp(cursor);
    if (cursor === 0) return null;
    const last = this.trace.events[cursor - 1];
    return last.e === "crashed" || last.e === "goal" || last.e === "limit" ? last : null;
  }

  /** How many primitive steps have happened by the cursor (pacing clock). */
  stepsAt(cursor: number): number {
    cursor = this.clamp(cursor);
    let steps = 0;
    for (let i = 0; i < cursor; i++) {
      if (isPrimitive(this.trace.events[i])) steps++;
    }
    return steps;
  }

  atEnd(cursor: number): boolean {
    return this.clamp(cursor) >= this.length;
  }
}
