/** Wires the console: joystick pad, switch, mode toggle, canvases, socket. */

import { knobOffset, releasedVector, stickVector } from "./joystick.js";
import { TeleopClient } from "./net.js";
import { DriveSwitch, RobotMode } from "./protocol.js";
import { connectionBadge, drawArena, drawGauges, formatReadout } from "./render.js";
import {
  clearTrail,
  initialState,
  onConnection,
  onFrame,
  SessionState,
  setJoystick,
  setMode,
  setSwitch,
} from "./store.js";

let state: SessionState = initialState();

const pad = document.getElementById("pad") as HTMLDivElement;
const knob = document.getElementById("knob") as HTMLDivElement;
const gauges = (document.getElementById("gauges") as HTMLCanvasElement).getContext("2d")!;
const arena = (document.getElementById("arena") as HTMLCanvasElement).getContext("2d")!;
const readout = document.getElementById("readout") as HTMLDivElement;
const badge = document.getElementById("badge") as HTMLSpanElement;
const clampLight = document.getElementById("clamp") as HTMLSpanElement;

const wsProtocol = location.protocol === "https:" ? "wss:" : "ws:";
const client = new TeleopClient(
  `${wsProtocol}//${location.host}/teleop`,
  {
    onFrame: (frame) => {
      state = onFrame(state, frame, Date.now());
    },
    onConnection: (connection) => {
      state = onConnection(state, connection);
    },
  },
  (url) => new WebSocket(url),
);
client.connect();

function pushInput(): void {
  client.setInput(state.input);
}

// --- joystick pad: pointer drag with spring return --------------------------

const PAD_RADIUS = 70; // px travel from center

function moveKnob(): void {
  const { dx, dy } = knobOffset(state.input.joystick, PAD_RADIUS);
  knob.style.transform = `translate(${dx}px, ${dy}px)`;
}

let dragging = false;

pad.addEventListener("pointerdown", (event) => {
  dragging = true;
  pad.setPointerCapture(event.pointerId);
  handleDrag(event);
});
pad.addEventListener("pointermove", (event) => {
  if (dragging) handleDrag(event);
});
const release = () => {
  if (!dragging) return;
  dragging = false;
  const { x, y } = releasedVector();
  state = setJoystick(state, x, y);
  pushInput();
  moveKnob();
};
pad.addEventListener("pointerup", release);
pad.addEventListener("pointercancel", release);

function handleDrag(event: PointerEvent): void {
  const rect = pad.getBoundingClientRect();
  const vector = stickVector(
    event.clientX - (rect.left + rect.width / 2),
    event.clientY - (rect.top + rect.height / 2),
    PAD_RADIUS,
  );
  state = setJoystick(state, vector.x, vector.y);
  pushInput();
  moveKnob();
}

// --- switch and mode controls ----------------------------------------------

for (const value of ["fwd", "off", "rev"] as DriveSwitch[]) {
  const button = document.getElementById(`switch-${value}`) as HTMLButtonElement;
  button.addEventListener("click", () => {
    state = setSwitch(state, value);
    pushInput();
    refreshControls();
  });
}

for (const value of ["scm", "ssr"] as RobotMode[]) {
  const button = document.getElementById(`mode-${value}`) as HTMLButtonElement;
  button.addEventListener("click", () => {
    state = setMode(state, value);
    pushInput();
    refreshControls();
  });
}

(document.getElementById("clear-trail") as HTMLButtonElement).addEventListener("click", () => {
  state = clearTrail(state);
});

(document.getElementById("reconnect") as HTMLButtonElement).addEventListener("click", () => {
  client.close();
  client.connect();
});

function refreshControls(): void {
  document.querySelectorAll("button[data-group]").forEach((element) => {
    const button = element as HTMLButtonElement;
    const group = button.dataset.group;
    const active =
      (group === "switch" && button.id === `switch-${state.input.switch}`) ||
      (group === "mode" && button.id === `mode-${state.input.mode}`);
    button.classList.toggle("active", active);
  });
}

// --- render loop -------------------------------------------------------------

function render(): void {
  const now = Date.now();
  drawGauges(gauges, state.latest);
  drawArena(arena, state);
  readout.textContent = state.latest ? formatReadout(state.latest) : "waiting for state...";
  const status = connectionBadge(state, now);
  badge.textContent = status.text;
  badge.className = `badge ${status.cssClass}`;
  const clamped = state.latest?.flags.clamped ?? false;
  clampLight.classList.toggle("lit", clamped);
  requestAnimationFrame(render);
}

refreshControls();
moveKnob();
requestAnimationFrame(render);
