import { describe, expect, it } from "vitest";

import { LevelEditor } from "../src/editor.js";

describe("level editor", () => {
  it("toggling the same cell twice leaves the level unchanged", () => {
    const ed = new LevelEditor(6, 6);
    const before = JSON.stringify(ed.toDoc("m"));
    ed.toggleWall(3, 3);
    expect(ed.isWall(3, 3)).toBe(true);
    ed.toggleWall(3, 3);
    expect(JSON.stringify(ed.toDoc("m"))).toBe(before);
  });

  it("never puts a wall under the robot or the goal", () => {
    const ed = new LevelEditor(6, 6);
    expect(ed.toggleWall(0, 0)).toBe(false); // start
    expect(ed.toggleWall(5, 5)).toBe(false); // goal
    expect(ed.toDoc("m").walls).toEqual([]);
  });

  it("tapping the start again spins its facing", () => {
    const ed = new LevelEditor(6, 6);
    ed.tool = "start";
    ed.tap(2, 2);
    expect(ed.start).toEqual({ x: 2, y: 2, facing: "E" });
    ed.tap(2, 2);
    expect(ed.start.facing).toBe("S");
    ed.tap(2, 2);
    ed.tap(2, 2);
    ed.tap(2, 2);
    expect(ed.start.facing).toBe("E"); // four taps, full circle
  });

  it("start and goal refuse walls and each other", () => {
    const ed = new LevelEditor(6, 6);
    ed.toggleWall(4, 4);
    ed.tool = "goal";
    expect(ed.tap(4, 4)).toBe(false); // a wall
    expect(ed.tap(0, 0)).toBe(false); // the start
    expect(ed.tap(1, 1)).toBe(true);
    ed.tool = "start";
    expect(ed.tap(1, 1)).toBe(false); // now the goal
  });

  it("ignores taps outside the grid", () => {
    const ed = new LevelEditor(4, 4);
    expect(ed.tap(-1, 0)).toBe(false);
    expect(ed.tap(0, 9)).toBe(false);
  });

  it("resizing drops out-of-bounds walls and re-anchors start and goal", () => {
    const ed = new LevelEditor(10, 10);
    ed.toggleWall(8, 8);
    ed.toggleWall(2, 2);
    ed.resize(6, 6);
    const doc = ed.toDoc("m");
    expect(doc.walls).toEqual([{ x: 2, y: 2 }]);
    expect(doc.start).toEqual({ x: 0, y: 0, facing: "E" });
    expect(doc.goal).toEqual({ x: 5, y: 5 });
  });

  it("serializes walls row-major like the engine's canonical form", () => {
    const ed = new LevelEditor(5, 5);
    ed.toggleWall(3, 2);
    ed.toggleWall(1, 2);
    ed.toggleWall(2, 1);
    expect(ed.toDoc("m").walls).toEqual([
      { x: 2, y: 1 }, { x: 1, y: 2 }, { x: 3, y: 2 },
    ]);
  });

  it("round-trips through a level document", () => {
    const ed = new LevelEditor(6, 6);
    ed.toggleWall(2, 3);
    ed.tool = "start";
    ed.tap(1, 1);
    ed.tap(1, 1); // facing S
    ed.tool = "goal";
    ed.tap(4, 2);
    const doc = ed.toDoc("Mine");

    const other = new LevelEditor();
    other.loadLevel(doc);
    expect(other.toDoc("Mine")).toEqual(doc);
  });
});
