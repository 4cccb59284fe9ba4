// Level editor model: tap cells to toggle walls, place the start (tapping
// it again spins the facing) and the goal. Pure state; the canvas and
// buttons live in main.ts.

import type { Facing, LevelDoc } from "./types.js";

const FACING_ORDER: Facing[] = ["N", "E", "S", "W"];

const key = (x: number, y: number) => `${x},${y}`;

export type EditorTool = "wall" | "start" | "goal";

export class LevelEditor {
  walls = new Set<string>();
  start = { x: 0, y: 0, facing: "E" as Facing };
  goal: { x: number; y: number };
  tool: EditorTool = "wall";

  constructor(public width = 8, public height = 8) {
    this.goal = { x: width - 1, y: height - 1 };
  }

  inBounds(x: number, y: number): boolean {
    return x >= 0 && y >= 0 && x < this.width && y < this.height;
  }

  isWall(x: number, y: number): boolean {
    return this.walls.has(key(x, y));
  }

  /** Apply the active tool to a tapped cell. Returns false when ignored. */
  tap(x: number, y: number): boolean {
    if (!this.inBounds(x, y)) return false;
    if (this.tool === "wall") return this.toggleWall(x, y);
    if (this.tool === "start") return this.placeStart(x, y);
    return this.placeGoal(x, y);
  }

  toggleWall(x: number, y: number): boolean {
    if ((x === this.start.x && y === this.start.y) ||
        (x === this.goal.x && y === this.goal.y)) {
      return false; // the robot and the goal keep their floor
    }
    const k = key(x, y);
    if (this.walls.has(k)) this.walls.delete(k);
    else this.walls.add(k);
    return true;
  }

  placeStart(x: number, y: number): boolean {
    if (this.isWall(x, y) || (x === this.goal.x && y === this.goal.y)) return false;
    if (x === this.start.x && y === this.start.y) {
      const next = (FACING_ORDER.indexOf(this.start.facing) + 1) % 4;
      this.start.facing = FACING_ORDER[next];
      return true;
    }
    this.start = { x, y, facing: this.start.facing };
    return true;
  }

  placeGoal(x: number, y: number): boolean {
    if (this.isWall(x, y) || (x === this.start.x && y === this.start.y)) return false;
    this.goal = { x, y };
    return true;
  }

  resize(width: number, height: number): void {
    this.width = width;
    this.height = height;
    for (const k of [...this.walls]) {
      const [x, y] = k.split(",").map(Number);
      if (!this.inBounds(x, y)) this.walls.delete(k);
    }
    this.start = { x: 0, y: 0, facing: this.start.facing };
    this.goal = { x: width - 1, y: height - 1 };
  }

  loadLevel(doc: LevelDoc): void {
    this.width = doc.width;
    this.height = doc.height;
    this.start = { ...doc.start };
    this.goal = { x: doc.goal.x, y: doc.goal.y };
    this.walls = new Set(doc.walls.map((c) => key(c.x, c.y)));
  }

  toDoc(name: string): LevelDoc {
    const walls = [...this.walls]
      .map((k) => k.split(",").map(Number))
      .sort((a, b) => a[1] - b[1] || a[0] - b[0])
      .map(([x, y]) => ({ x, y }));
    return {
      name,
      width: this.width,
      height: this.height,
      start: { ...this.start },
      goal: { ...this.goal },
      walls,
    };
  }
}
