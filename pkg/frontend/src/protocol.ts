/** Wire protocol shared with the simulator service (JSON over WebSocket, SI units). */

export type DriveSwitch = "fwd" | "off" | "rev";
export type RobotMode = "scm" | "ssr";

export interface JoystickVector {
  x: number;
  y: number;
}

export interface StateFrame {
  type: "state";
  v: number;
  t: number;
  mode: RobotMode;
  module_bends: number[];
  end_effector: { x: number; y: number; z: number };
  ssr: { x: number; y: number; heading: number };
  flags: { clamped: boolean };
}

export interface InputState {
  joystick: JoystickVector;
  switch: DriveSwitch;
  mode: RobotMode;
}

export const NEUTRAL_INPUT: InputState = {
  joystick: { x: 0, y: 0 },
  switch: "off",
  mode: "scm",
};

function isNumber(value: unknown): value is number {
  return typeof value === "number" && Number.isFinite(value);
}

/** Parse one server message; returns null for anything that is not a valid state frame. */
export function parseFrame(raw: string): StateFrame | null {
  let data: unknown;
  try {
    data = JSON.parse(raw);
  } catch {
    return null;
  }
  if (typeof data !== "object" || data === null) return null;
  const frame = data as Record<string, unknown>;
  if (frame.type !== "state") return null;
  const bends = frame.module_bends;
  if (!Array.isArray(bends) || bends.length !== 4 || !bends.every(isNumber)) return null;
  const ee = frame.end_effector as Record<string, unknown> | undefined;
  const ssr = frame.ssr as Record<string, unknown> | undefined;
  const flags = frame.flags as Record<string, unknown> | undefined;
  if (!ee || !isNumber(ee.x) || !isNumber(ee.y) || !isNumber(ee.z)) return null;
  if (!ssr || !isNumber(ssr.x) || !isNumber(ssr.y) || !isNumber(ssr.heading)) return null;
  if (!isNumber(frame.t)) return null;
  if (frame.mode !== "scm" && frame.mode !== "ssr") return null;
  return {
    type: "state",
    v: isNumber(frame.v) ? frame.v : 1,
    t: frame.t,
    mode: frame.mode,
    module_bends: bends as number[],
    end_effector: { x: ee.x as number, y: ee.y as number, z: ee.z as number },
    ssr: { x: ssr.x as number, y: ssr.y as number, heading: ssr.heading as number },
    flags: { clamped: Boolean(flags?.clamped) },
  };
}

const clamp = (value: number): number => Math.max(-1, Math.min(1, value));

/** Encode the current input as one outbound message. */
export function encodeInput(input: InputState): string {
  return JSON.stringify({
    type: "input",
    joystick: { x: clamp(input.joystick.x), y: clamp(input.joystick.y) },
    switch: input.switch,
    mode: input.mode,
  });
}
