// Page wiring: buttons, prompts, the animation loop and screen switching.
// All game logic lives in the engine server and the pure modules; this file
// only moves pixels and DOM around.

import { api, kidMessage } from "./api.js";
import { LevelEditor } from "./editor.js";
import { makeCond, type Sensor, SENSOR_PHRASES } from "./program.js";
import { drawStage, renderQueue } from "./render.js";
import { Session } from "./state.js";
import type { CondDoc, LevelSummary } from "./types.js";

const $ = <T extends HTMLElement>(id: string): T => {
  const el = document.getElementById(id);
  if (!el) throw new Error(`missing #${id}`);
  return el as T;
};

const session = new Session();
const editor = new LevelEditor();

const stage = $<HTMLCanvasElement>("stage");
const queuePanel = $("queue");
const toast = $("toast");
const timerEl = $("timer");
const levelNameEl = $("level-name");
const playbackBar = $("playback-bar");
const scrub = $<HTMLInputElement>("scrub");
const statusLine = $("status-line");

let playClockSteps = 0; // fractional primitive steps elapsed while playing
let lastFrame = 0;
let crashFlash = false;

// --- little UI helpers -------------------------------------------------------

function showToast(message: string): void {
  toast.textContent = message;
  toast.classList.add("show");
  window.setTimeout(() => toast.classList.remove("show"), 2600);
}

function setMode(mode: typeof session.mode): void {
  session.mode = mode;
  document.body.dataset.mode = mode;
}

function refreshQueue(highlightId: number | null = null): void {
  renderQueue(queuePanel, session.builder.rows(), highlightId);
  const marker = queuePanel.querySelector(".queue-marker");
  marker?.scrollIntoView({ block: "nearest" });
  $("btn-else").toggleAttribute("disabled", !session.builder.insideIfThen());
  $("btn-done").toggleAttribute("disabled", !session.builder.inBlock());
}

function refreshStage(): void {
  if (!session.level) return;
  if (session.playback) {
    const pose = session.playback.poseAt(session.cursor);
    const terminal = session.playback.terminalAt(session.cursor);
    drawStage(stage, session.level, pose, {
      crashAt: terminal?.e === "crashed" && crashFlash ? terminal.attempted : undefined,
      goalGlow: terminal?.e === "goal",
    });
  } else {
    drawStage(stage, session.level, { ...session.level.start });
  }
}

// --- prompts ------------------------------------------------------------------

const overlay = $("prompt-overlay");

function closePrompt(): void {
  overlay.classList.remove("show");
  overlay.textContent = "";
}

function numberPrompt(title: string): Promise<number | null> {
  return new Promise((resolve) => {
    overlay.classList.add("show");
    const box = document.createElement("div");
    box.className = "prompt-box";
    box.innerHTML = `
      <h2>${title}</h2>
      <div class="stepper">
        <button class="round" id="p-minus">−</button>
        <input id="p-num" type="number" min="1" max="99" value="3" inputmode="numeric">
        <button class="round" id="p-plus">+</button>
      </div>
      <p class="prompt-hint">pick 1 to 99</p>
      <div class="prompt-actions">
        <button class="round cancel" id="p-cancel">✕</button>
        <button class="round ok" id="p-ok">✓</button>
      </div>`;
    overlay.appendChild(box);
    const num = box.querySelector<HTMLInputElement>("#p-num")!;
    const hint = box.querySelector<HTMLElement>(".prompt-hint")!;
    box.querySelector("#p-minus")!.addEventListener("click", () => {
      num.value = String(Math.max(1, Number(num.value || "1") - 1));
    });
    box.querySelector("#p-plus")!.addEventListener("click", () => {
      num.value = String(Math.min(99, Number(num.value || "0") + 1));
    });
    box.querySelector("#p-ok")!.addEventListener("click", () => {
      const value = Number(num.value);
      if (!Number.isInteger(value) || value < 1 || value > 99) {
        hint.textContent = "whole numbers from 1 to 99 only!";
        hint.classList.add("angry");
        return; // reject at the prompt; nothing reaches the queue
      }
      closePrompt();
      resolve(value);
    });
    box.querySelector("#p-cancel")!.addEventListener("click", () => {
      closePrompt();
      resolve(null);
    });
  });
}

function condPrompt(title: string): Promise<CondDoc | null> {
  return new Promise((resolve) => {
    overlay.classList.add("show");
    const box = document.createElement("div");
    box.className = "prompt-box";
    const sensors = Object.keys(SENSOR_PHRASES) as Sensor[];
    box.innerHTML = `
      <h2>${title}</h2>
      <div class="cond-grid">
        ${sensors.map((s) =>
          `<button class="cond-pick" data-sensor="${s}">${SENSOR_PHRASES[s]}</button>`).join("")}
      </div>
      <button id="p-not" class="not-toggle">NOT: off</button>
      <div class="prompt-actions">
        <button class="round cancel" id="p-cancel">✕</button>
      </div>`;
    overlay.appendChild(box);
    let nots = 0;
    const notBtn = box.querySelector<HTMLButtonElement>("#p-not")!;
    notBtn.addEventListener("click", () => {
      nots = (nots + 1) % 5; // 0..4 stacked nots, the engine's limit
      notBtn.textContent = nots === 0 ? "NOT: off" : `NOT: ${"not ".repeat(nots).trim()}`;
    });
    for (const btn of box.querySelectorAll<HTMLButtonElement>(".cond-pick")) {
      btn.addEventListener("click", () => {
        closePrompt();
        resolve(makeCond(btn.dataset.sensor as Sensor, nots));
      });
    }
    box.querySelector("#p-cancel")!.addEventListener("click", () => {
      closePrompt();
      resolve(null);
    });
  });
}

// --- command building -----------------------------------------------------------

function buildAction(fn: () => string | null): void {
  if (session.mode !== "build") return;
  const problem = fn();
  if (problem) showToast(problem);
  refreshQueue();
}

$("btn-move").addEventListener("click", async () => {
  if (session.mode !== "build") return;
  const n = await numberPrompt("How many squares?");
  if (n !== null) buildAction(() => session.builder.addMove(n));
});
$("btn-left").addEventListener("click", () => buildAction(() => session.builder.addTurn("left")));
$("btn-right").addEventListener("click", () => buildAction(() => session.builder.addTurn("right")));
$("btn-repeat").addEventListener("click", async () => {
  if (session.mode !== "build") return;
  const n = await numberPrompt("Repeat how many times?");
  if (n !== null) buildAction(() => session.builder.openRepeat(n));
});
$("btn-while").addEventListener("click", async () => {
  if (session.mode !== "build") return;
  const cond = await condPrompt("Keep going while…");
  if (cond) buildAction(() => session.builder.openWhile(cond));
});
$("btn-if").addEventListener("click", async () => {
  if (session.mode !== "build") return;
  const cond = await condPrompt("Only if…");
  if (cond) buildAction(() => session.builder.openIf(cond));
});
$("btn-else").addEventListener("click", () => buildAction(() => session.builder.beginElse()));
$("btn-done").addEventListener("click", () => buildAction(() => session.builder.closeBlock()));
$("btn-delete").addEventListener("click", () => buildAction(() => {
  session.builder.deleteLast();
  return null;
}));

// --- play! -----------------------------------------------------------------------

$("btn-play").addEventListener("click", async () => {
  if (session.mode !== "build" || !session.level) return;
  if (session.builder.isEmpty()) {
    showToast("add some commands first!");
    return;
  }
  const levelRef = session.levelId
    ? { level_id: session.levelId }
    : { level: session.level };
  try {
    const program = session.builder.toDoc();
    const elapsed = Math.floor(session.elapsedSeconds());
    const { trace, score } = await api.score(levelRef, program, elapsed);
    session.startPlayback(trace, score);
    setMode("playback");
    playClockSteps = 0;
    lastFrame = performance.now();
    scrub.max = String(session.playback!.length);
    scrub.value = "0";
    statusLine.textContent = "";
    requestAnimationFrame(tick);
  } catch (error) {
    showToast(kidMessage(error));
  }
});

function advanceCursorTo(target: number): void {
  const playback = session.playback!;
  session.cursor = playback.clamp(target);
  scrub.value = String(session.cursor);
  refreshStage();
  refreshQueue(playback.highlightAt(session.cursor));
}

function tick(now: number): void {
  const playback = session.playback;
  if (!playback || session.mode !== "playback") return;
  if (session.playing) {
    playClockSteps += ((now - lastFrame) / 1000) * session.stepsPerSecond;
    let cursor = session.cursor;
    while (cursor < playback.length && playback.stepsAt(cursor + 1) <= playClockSteps) {
      cursor++;
    }
    if (cursor !== session.cursor) advanceCursorTo(cursor);
    if (playback.atEnd(session.cursor)) {
      session.playing = false;
      finishPlayback();
    }
  }
  lastFrame = now;
  requestAnimationFrame(tick);
}

function finishPlayback(): void {
  const playback = session.playback!;
  const outcome = playback.trace.outcome;
  if (outcome === "goal") {
    window.setTimeout(() => {
      if (session.mode === "playback") showScoreScreen();
    }, 700);
  } else if (outcome === "crash") {
    crashFlash = true;
    refreshStage();
    statusLine.textContent = "crash! the robot hit something — try again";
  } else if (outcome === "step_limit") {
    statusLine.textContent = "your robot is running forever! check your loops";
  } else {
    statusLine.textContent = "the robot stopped before the goal — add more commands";
  }
}

scrub.addEventListener("input", () => {
  if (!session.playback) return;
  session.playing = false;
  crashFlash = session.playback.atEnd(Number(scrub.value));
  playClockSteps = session.playback.stepsAt(Number(scrub.value));
  advanceCursorTo(Number(scrub.value));
});

$("btn-pause").addEventListener("click", () => {
  if (!session.playback) return;
  session.playing = !session.playing;
  if (session.playing) {
    if (session.playback.atEnd(session.cursor)) {
      playClockSteps = 0;
      crashFlash = false;
      advanceCursorTo(0);
    }
    lastFrame = performance.now();
    requestAnimationFrame(tick);
  }
});

$("btn-back-build").addEventListener("click", () => {
  crashFlash = false;
  session.backToBuild();
  setMode("build");
  refreshStage();
  refreshQueue();
});

$<HTMLSelectElement>("speed").addEventListener("change", (ev) => {
  session.stepsPerSecond = Number((ev.target as HTMLSelectElement).value);
});

// --- score screen -------------------------------------------------------------------

async function showScoreScreen(): Promise<void> {
  const score = session.score!;
  setMode("score");
  for (const [key, value] of Object.entries({
    completion: score.completion, constructs: score.constructs,
    brevity: score.brevity, speed: score.speed, total: score.total,
  })) {
    $(`score-${key}`).textContent = String(value);
  }
  try {
    const program = session.builder.toDoc();
    const [pseudo, td] = await Promise.all([
      api.exportText(program, "pseudocode"),
      api.exportText(program, "touchdevelop"),
    ]);
    $("export-pseudo").textContent = pseudo.text;
    $("export-td").textContent = td.text;
  } catch (error) {
    $("export-pseudo").textContent = kidMessage(error);
  }
}

$("btn-retry").addEventListener("click", () => {
  session.backToBuild();
  setMode("build");
  refreshStage();
  refreshQueue();
});
$("btn-score-levels").addEventListener("click", () => openLevelPicker());

// --- level picker ----------------------------------------------------------------------

async function openLevelPicker(): Promise<void> {
  try {
    const levels = await api.listLevels();
    overlay.classList.add("show");
    const box = document.createElement("div");
    box.className = "prompt-box picker";
    box.innerHTML = `<h2>Pick a level</h2><div class="level-list"></div>
      <div class="prompt-actions"><button class="round cancel" id="p-cancel">✕</button></div>`;
    overlay.appendChild(box);
    const list = box.querySelector(".level-list")!;
    for (const summary of levels) {
      const btn = document.createElement("button");
      btn.className = "level-pick";
      btn.textContent = `${summary.name} (${summary.width}×${summary.height}, best ${summary.shortest})`;
      btn.addEventListener("click", () => void pickLevel(summary));
      list.appendChild(btn);
    }
    box.querySelector("#p-cancel")!.addEventListener("click", closePrompt);
  } catch (error) {
    showToast(kidMessage(error));
  }
}

async function pickLevel(summary: LevelSummary): Promise<void> {
  try {
    const level = await api.getLevel(summary.id);
    closePrompt();
    session.openLevel(level, summary.id);
    setMode("build");
    levelNameEl.textContent = level.name ?? summary.id;
    crashFlash = false;
    refreshStage();
    refreshQueue();
  } catch (error) {
    showToast(kidMessage(error));
  }
}

$("btn-levels").addEventListener("click", () => void openLevelPicker());

// --- level editor -----------------------------------------------------------------------

const editorCanvas = $<HTMLCanvasElement>("editor-stage");

function refreshEditor(): void {
  drawStage(editorCanvas, editor.toDoc("draft"), { ...editor.start });
}

$("btn-editor").addEventListener("click", () => {
  setMode("editor");
  refreshEditor();
});

for (const tool of ["wall", "start", "goal"] as const) {
  $(`tool-${tool}`).addEventListener("click", () => {
    editor.tool = tool;
    for (const other of ["wall", "start", "goal"]) {
      $(`tool-${other}`).classList.toggle("active", other === tool);
    }
  });
}

editorCanvas.addEventListener("pointerdown", (ev) => {
  const rect = editorCanvas.getBoundingClientRect();
  const cell = Math.floor(Math.min(
    editorCanvas.width / editor.width, editorCanvas.height / editor.height));
  const ox = Math.floor((editorCanvas.width - cell * editor.width) / 2);
  const oy = Math.floor((editorCanvas.height - cell * editor.height) / 2);
  const px = ((ev.clientX - rect.left) / rect.width) * editorCanvas.width;
  const py = ((ev.clientY - rect.top) / rect.height) * editorCanvas.height;
  editor.tap(Math.floor((px - ox) / cell), Math.floor((py - oy) / cell));
  refreshEditor();
});

$<HTMLSelectElement>("editor-size").addEventListener("change", (ev) => {
  const size = Number((ev.target as HTMLSelectElement).value);
  editor.resize(size, size);
  refreshEditor();
});

$("btn-editor-save").addEventListener("click", async () => {
  const name = ($<HTMLInputElement>("editor-name").value || "My Maze").trim();
  try {
    const { id } = await api.saveLevel(editor.toDoc(name));
    showToast(`saved! "${name}" is now in the level picker`);
    void id;
  } catch (error) {
    showToast(kidMessage(error));
  }
});

$("btn-editor-test").addEventListener("click", () => {
  const name = ($<HTMLInputElement>("editor-name").value || "My Maze").trim();
  session.openLevel(editor.toDoc(`${name} (draft)`), null);
  setMode("build");
  levelNameEl.textContent = `${name} (draft)`;
  refreshStage();
  refreshQueue();
});

$("btn-editor-back").addEventListener("click", () => {
  setMode(session.level ? "build" : "build");
  if (session.level) {
    refreshStage();
    refreshQueue();
  }
});

// --- timer + boot ------------------------------------------------------------------------

window.setInterval(() => {
  if (session.level && session.mode === "build") {
    timerEl.textContent = `${Math.floor(session.elapsedSeconds())}s`;
  }
}, 400);

async function boot(): Promise<void> {
  refreshQueue();
  try {
    const levels = await api.listLevels();
    if (levels.length > 0) await pickLevel(levels[0]);
  } catch {
    showToast("can't reach the game server — is it running?");
  }
}

void boot();
