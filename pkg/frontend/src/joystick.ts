/** Math for the spring-return virtual joystick pad. */

import { JoystickVector } from "./protocol.js";

/**
 * Map a pointer offset from the pad center to a stick vector.
 *
 * Screen y grows downward but pushing the stick up must pitch up, so the
 * y component is flipped.  Components are clamped into [-1, 1]
 * independently, matching the two-axis hardware stick.
 */
export function stickVector(dx: number, dy: number, radius: number): JoystickVector {
  if (radius <= 0) throw new Error("pad radius must be positive");
  const clamp = (v: number) => Math.max(-1, Math.min(1, v));
  return { x: clamp(dx / radius), y: clamp((0 - dy) / radius) }; // 0 - dy avoids -0
}

/** Spring return: the stick snaps to center the moment it is let go. */
export function releasedVector(): JoystickVector {
  return { x: 0, y: 0 };
}

/** Knob position (pixels from center) for drawing a given stick vector. */
export function knobOffset(vector: JoystickVector, radius: number): { dx: number; dy: number } {
  return { dx: vector.x * radius, dy: -vector.y * radius };
}
