/** Single state store for the console; renders are pure functions of this. */

import { InputState, NEUTRAL_INPUT, StateFrame } from "./protocol.js";

export type Connection = "connecting" | "connected" | "disconnected";

export const TRAIL_LIMIT = 2000;
export const STALE_AFTER_MS = 500;

export interface TrailPoint {
  x: number;
  y: number;
  heading: number;
}

export interface SessionState {
  connection: Connection;
  latest: StateFrame | null;
  lastFrameAt: number | null; // ms clock of the last received frame
  input: InputState;
  trail: TrailPoint[];
}

export function initialState(): SessionState {
  return {
    connection: "connecting",
    latest: null,
    lastFrameAt: null,
    input: { ...NEUTRAL_INPUT, joystick: { ...NEUTRAL_INPUT.joystick } },
    trail: [],
  };
}

/** Record a received frame; the trail is a bounded ring of base poses. */
export function onFrame(state: SessionState, frame: StateFrame, now: number): SessionState {
  const point = { x: frame.ssr.x, y: frame.ssr.y, heading: frame.ssr.heading };
  const trail = state.trail.concat(point);
  if (trail.length > TRAIL_LIMIT) {
    trail.splice(0, trail.length - TRAIL_LIMIT);
  }
  return { ...state, latest: frame, lastFrameAt: now, trail };
}

export function onConnection(state: SessionState, connection: Connection): SessionState {
  return { ...state, connection };
}

export function setJoystick(state: SessionState, x: number, y: number): SessionState {
  return { ...state, input: { ...state.input, joystick: { x, y } } };
}

export function setSwitch(state: SessionState, value: InputState["switch"]): SessionState {
  return { ...state, input: { ...state.input, switch: value } };
}

export function setMode(state: SessionState, mode: InputState["mode"]): SessionState {
  return { ...state, input: { ...state.input, mode } };
}

export function clearTrail(state: SessionState): SessionState {
  return { ...state, trail: [] };
}

/** True when no frame arrived recently enough to trust the picture. */
export function isStale(state: SessionState, now: number): boolean {
  if (state.connection !== "connected") return true;
  if (state.lastFrameAt === null) return true;
  return now - state.lastFrameAt > STALE_AFTER_MS;
}
