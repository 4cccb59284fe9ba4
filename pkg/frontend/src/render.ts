// Drawing: the maze canvas and the command queue panel.

import type { QueueRow } from "./program.js";
import type { Pose } from "./playback.js";
import type { Facing, LevelDoc } from "./types.js";

const ANGLES: Record<Facing, number> = { N: -Math.PI / 2, E: 0, S: Math.PI / 2, W: Math.PI };

export interface StageEffects {
  crashAt?: { x: number; y: number };
  goalGlow?: boolean;
}

export function drawStage(canvas: HTMLCanvasElement, level: LevelDoc,
                          pose: Pose, effects: StageEffects = {}): void {
  const ctx = canvas.getContext("2d");
  if (!ctx) return;
  const cell = Math.floor(Math.min(
    canvas.width / level.width, canvas.height / level.height));
  const ox = Math.floor((canvas.width - cell * level.width) / 2);
  const oy = Math.floor((canvas.height - cell * level.height) / 2);

  ctx.fillStyle = "#10203a";
  ctx.fillRect(0, 0, canvas.width, canvas.height);

  for (let y = 0; y < level.height; y++) {
    for (let x = 0; x < level.width; x++) {
      ctx.fillStyle = (x + y) % 2 ? "#1d3354" : "#21395e";
      ctx.fillRect(ox + x * cell + 1, oy + y * cell + 1, cell - 2, cell - 2);
    }
  }

  ctx.fillStyle = "#8a5a2b";
  for (const wall of level.walls) {
    ctx.fillRect(ox + wall.x * cell + 2, oy + wall.y * cell + 2, cell - 4, cell - 4);
    ctx.strokeStyle = "#5f3d1c";
    ctx.strokeRect(ox + wall.x * cell + 2, oy + wall.y * cell + 2, cell - 4, cell - 4);
  }

  // goal: a bright star pad
  const gx = ox + level.goal.x * cell + cell / 2;
  const gy = oy + level.goal.y * cell + cell / 2;
  ctx.fillStyle = effects.goalGlow ? "#ffe66d" : "#ffd166";
  ctx.beginPath();
  for (let i = 0; i < 10; i++) {
    const r = (i % 2 ? 0.18 : 0.38) * cell;
    const a = (i / 10) * Math.PI * 2 - Math.PI / 2;
    ctx.lineTo(gx + r * Math.cos(a), gy + r * Math.sin(a));
  }
  ctx.closePath();
  ctx.fill();

  // the robot: round body plus a nose wedge showing the facing
  const rx = ox + pose.x * cell + cell / 2;
  const ry = oy + pose.y * cell + cell / 2;
  ctx.fillStyle = "#4ecdc4";
  ctx.beginPath();
  ctx.arc(rx, ry, cell * 0.32, 0, Math.PI * 2);
  ctx.fill();
  const a = ANGLES[pose.facing];
  ctx.fillStyle = "#0b1526";
  ctx.beginPath();
  ctx.moveTo(rx + Math.cos(a) * cell * 0.3, ry + Math.sin(a) * cell * 0.3);
  ctx.arc(rx, ry, cell * 0.14, a + 2.2, a - 2.2);
  ctx.closePath();
  ctx.fill();

  if (effects.crashAt) {
    const cx = ox + effects.crashAt.x * cell + cell / 2;
    const cy = oy + effects.crashAt.y * cell + cell / 2;
    ctx.strokeStyle = "#ff6b6b";
    ctx.lineWidth = 3;
    for (let i = 0; i < 8; i++) {
      const b = (i / 8) * Math.PI * 2;
      ctx.beginPath();
      ctx.moveTo(cx + Math.cos(b) * cell * 0.12, cy + Math.sin(b) * cell * 0.12);
      ctx.lineTo(cx + Math.cos(b) * cell * 0.4, cy + Math.sin(b) * cell * 0.4);
      ctx.stroke();
    }
    ctx.lineWidth = 1;
  }
}

const BRACKET_COLORS = ["#ffd166", "#4ecdc4", "#ff8fab", "#a0c4ff", "#caffbf", "#ffc6ff", "#fdffb6"];

/** Rebuild the queue panel. Rows carry data-stmt-id so playback can light
 * up the row matching the latest trace event. */
export function renderQueue(container: HTMLElement, rows: QueueRow[],
                            highlightId: number | null): void {
  container.textContent = "";
  for (const row of rows) {
    const div = container.ownerDocument.createElement("div");
    div.className = "queue-row";
    if (row.marker) div.classList.add("queue-marker");
    if (row.closes) div.classList.add("queue-close");
    if (row.id !== null) {
      div.dataset.stmtId = String(row.id);
      if (row.id === highlightId) div.classList.add("queue-highlight");
    }
    div.style.paddingLeft = `${0.6 + row.depth * 1.1}em`;
    div.style.borderLeftColor = BRACKET_COLORS[row.depth % BRACKET_COLORS.length];
    div.textContent = row.text;
    container.appendChild(div);
  }
}

export function highlightedIds(container: HTMLElement): number[] {
  return [...container.querySelectorAll(".queue-highlight")]
    .map((el) => Number((el as HTMLElement).dataset.stmtId));
}
