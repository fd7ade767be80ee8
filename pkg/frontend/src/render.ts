/** Canvas rendering: pure functions of the session state. */

import { StateFrame } from "./protocol.js";
import { isStale, SessionState } from "./store.js";

const RAD_TO_DEG = 180 / Math.PI;
const BEND_LIMIT_RAD = Math.PI / 2;

/** Normalized gauge fill in [-1, 1] for one module bend. */
export function gaugeFill(bendRad: number): number {
  return Math.max(-1, Math.min(1, bendRad / BEND_LIMIT_RAD));
}

export function formatReadout(frame: StateFrame): string {
  const ee = frame.end_effector;
  const pose = frame.ssr;
  const mm = (v: number) => (v * 1000).toFixed(1);
  return (
    `t=${frame.t.toFixed(2)}s  ` +
    `end effector (${mm(ee.x)}, ${mm(ee.y)}, ${mm(ee.z)}) mm  ` +
    `base (${pose.x.toFixed(3)}, ${pose.y.toFixed(3)}) m ` +
    `heading ${(pose.heading * RAD_TO_DEG).toFixed(1)} deg`
  );
}

const GAUGE_LABELS = ["yaw 1", "pitch 2", "yaw 3", "pitch 4"];

export function drawGauges(ctx: CanvasRenderingContext2D, frame: StateFrame | null): void {
  const { width, height } = ctx.canvas;
  ctx.clearRect(0, 0, width, height);
  const n = 4;
  const slot = width / n;
  const barWidth = slot * 0.4;
  const mid = height / 2;
  const span = height / 2 - 18;
  for (let i = 0; i < n; i++) {
    const cx = slot * i + slot / 2;
    ctx.strokeStyle = "#555";
    ctx.strokeRect(cx - barWidth / 2, mid - span, barWidth, 2 * span);
    ctx.beginPath();
    ctx.moveTo(cx - barWidth / 2, mid);
    ctx.lineTo(cx + barWidth / 2, mid);
    ctx.stroke();
    const bend = frame ? frame.module_bends[i] : 0;
    const fill = gaugeFill(bend);
    const clamped = Math.abs(fill) >= 1;
    ctx.fillStyle = clamped ? "#e05050" : "#4caf50";
    const barHeight = Math.abs(fill) * span;
    const top = fill >= 0 ? mid - barHeight : mid;
    ctx.fillRect(cx - barWidth / 2, top, barWidth, barHeight);
    ctx.fillStyle = "#ddd";
    ctx.font = "11px sans-serif";
    ctx.textAlign = "center";
    ctx.fillText(GAUGE_LABELS[i], cx, height - 4);
    ctx.fillText(`${(bend * RAD_TO_DEG).toFixed(0)}°`, cx, 12);
  }
}

/** Top-down view: +x right, +y up on screen, breadcrumb trail behind the glyph. */
export function drawArena(ctx: CanvasRenderingContext2D, state: SessionState): void {
  const { width, height } = ctx.canvas;
  ctx.clearRect(0, 0, width, height);
  const scale = 120; // px per meter
  const toScreen = (x: number, y: number) => ({
    sx: width / 2 + x * scale,
    sy: height / 2 - y * scale,
  });

  ctx.strokeStyle = "#333";
  ctx.beginPath();
  ctx.moveTo(width / 2, 0);
  ctx.lineTo(width / 2, height);
  ctx.moveTo(0, height / 2);
  ctx.lineTo(width, height / 2);
  ctx.stroke();

  if (state.trail.length > 1) {
    ctx.strokeStyle = "#4caf50";
    ctx.beginPath();
    state.trail.forEach((point, index) => {
      const { sx, sy } = toScreen(point.x, point.y);
      if (index === 0) ctx.moveTo(sx, sy);
      else ctx.lineTo(sx, sy);
    });
    ctx.stroke();
  }

  const frame = state.latest;
  if (!frame) return;
  const { sx, sy } = toScreen(frame.ssr.x, frame.ssr.y);
  const heading = frame.ssr.heading;
  ctx.save();
  ctx.translate(sx, sy);
  ctx.rotate(-heading); // canvas rotation is clockwise; world heading is ccw
  ctx.fillStyle = frame.flags.clamped ? "#e05050" : "#80c0ff";
  ctx.beginPath();
  ctx.moveTo(14, 0);
  ctx.lineTo(-8, 7);
  ctx.lineTo(-8, -7);
  ctx.closePath();
  ctx.fill();
  ctx.restore();
}

export function connectionBadge(state: SessionState, now: number): { text: string; cssClass: string } {
  if (state.connection === "connected" && !isStale(state, now)) {
    return { text: "connected", cssClass: "ok" };
  }
  if (state.connection === "connected") {
    return { text: "connection degraded", cssClass: "warn" };
  }
  return { text: state.connection, cssClass: "bad" };
}
