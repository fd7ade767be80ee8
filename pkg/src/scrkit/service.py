"""HTTP/WebSocket host around the teleop simulator.

One ticker task owns the simulation; websocket handlers never touch state
directly.  Inbound input messages go through an ordered queue and are
applied at tick boundaries (last message wins and is then held); every tick
one state frame is broadcast to all connected clients.

Wire protocol (JSON, SI units):

  client -> server:
    {"type": "input", "joystick": {"x": 0..1, "y": 0..1},
     "switch": "fwd"|"off"|"rev", "mode": "scm"|"ssr"}

  server -> client, one per tick:
    {"type": "state", "v": 1, "t": <s>, "mode": "scm"|"ssr",
     "module_bends": [rad, rad, rad, rad],
     "end_effector": {"x": m, "y": m, "z": m},
     "ssr": {"x": m, "y": m, "heading": rad},
     "flags": {"clamped": bool}}

Malformed client messages get {"type": "error", "message": ...} and the
connection stays open.
"""

import asyncio
import contextlib
import json
from collections import deque
from dataclasses import asdict
from pathlib import Path

from fastapi import FastAPI, WebSocket, WebSocketDisconnect
from fastapi.responses import HTMLResponse
from fastapi.staticfiles import StaticFiles

from scrkit.teleop import (
    DriveSwitch,
    RobotMode,
    SimConfig,
    TeleopInput,
    TeleopState,
    reset,
    scm_pose,
    step,
)

__all__ = ["PROTOCOL_VERSION", "TeleopSession", "parse_input_message", "state_frame", "create_app"]

PROTOCOL_VERSION = 1

_PLACEHOLDER_PAGE = """<!doctype html>
<html><head><title>scrkit teleop</title></head>
<body><h1>scrkit teleop service</h1>
<p>No UI build found. Endpoints: <code>GET /state</code>, <code>GET /config</code>,
websocket <code>/teleop</code>.</p>
<p>Build the console with <code>npm run build</code> in <code>frontend/</code> and
restart with <code>--ui-dir frontend/dist</code>.</p></body></html>
"""


def parse_input_message(raw) -> TeleopInput:
    """Validate one client message and turn it into a TeleopInput."""
    if not isinstance(raw, dict):
        raise ValueError("message must be a JSON object")
    if raw.get("type") != "input":
        raise ValueError(f"unsupported message type {raw.get('type')!r}")
    joystick = raw.get("joystick", {"x": 0.0, "y": 0.0})
    if not isinstance(joystick, dict):
        raise ValueError("joystick must be an object with x and y")
    x = joystick.get("x", 0.0)
    y = joystick.get("y", 0.0)
    for name, value in (("x", x), ("y", y)):
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise ValueError(f"joystick.{name} must be a number")
    try:
        switch = DriveSwitch(raw.get("switch", "off"))
        mode = RobotMode(raw.get("mode", "scm"))
    except ValueError as exc:
        raise ValueError(str(exc)) from exc
    return TeleopInput(joystick_x=float(x), joystick_y=float(y), drive_switch=switch, mode=mode)


def state_frame(state: TeleopState, mode: RobotMode, link_length: float) -> dict:
    """Serialize one state snapshot as a wire frame."""
    position, _ = scm_pose(state, link_length)
    x, y, heading = state.ssr_pose
    return {
        "type": "state",
        "v": PROTOCOL_VERSION,
        "t": state.sim_time,
        "mode": mode.value,
        "module_bends": list(state.module_bends),
        "end_effector": {
            "x": float(position[0]),
            "y": float(position[1]),
            "z": float(position[2]),
        },
        "ssr": {"x": x, "y": y, "heading": heading},
        "flags": {"clamped": state.clamped},
    }


class TeleopSession:
    """Simulation state plus its ordered command queue.

    Single-owner: only the ticker calls :meth:`tick`.  Inputs submitted
    between ticks are applied in order at the next tick boundary; the last
    one becomes the held input (sample-and-hold).
    """

    def __init__(self, config: SimConfig):
        self.config = config
        self.state = reset(config)
        self.held_input = TeleopInput()
        self._pending = deque()

    def submit(self, command: TeleopInput) -> None:
        self._pending.append(command)

    def tick(self) -> dict:
        while self._pending:
            self.held_input = self._pending.popleft()
        self.state = step(self.state, self.held_input, self.config, 1.0 / self.config.tick_rate)
        return self.snapshot()

    def snapshot(self) -> dict:
        return state_frame(self.state, self.held_input.mode, self.config.link_length)


def create_app(
    config: SimConfig | None = None,
    ui_dir: str | None = None,
    trajectory_log: str | None = None,
) -> FastAPI:
    """Build the ASGI app: /state, /config, websocket /teleop, static UI."""
    config = config or SimConfig()
    session = TeleopSession(config)
    clients: set[asyncio.Queue] = set()

    async def ticker() -> None:
        log = open(trajectory_log, "w") if trajectory_log else None
        if log:
            log.write("t_s,mode,x_m,y_m,heading_rad,bend1_rad,bend2_rad,bend3_rad,bend4_rad\n")
        try:
            interval = 1.0 / config.tick_rate
            while True:
                await asyncio.sleep(interval)
                frame = session.tick()
                for queue in clients:
                    queue.put_nowait(frame)
                if log:
                    ssr = frame["ssr"]
                    bends = ",".join(repr(b) for b in frame["module_bends"])
                    log.write(
                        f"{frame['t']!r},{frame['mode']},{ssr['x']!r},{ssr['y']!r},"
                        f"{ssr['heading']!r},{bends}\n"
                    )
        finally:
            if log:
                log.close()

    @contextlib.asynccontextmanager
    async def lifespan(app: FastAPI):
        task = asyncio.create_task(ticker())
        try:
            yield
        finally:
            task.cancel()
            with contextlib.suppress(asyncio.CancelledError):
                await task

    app = FastAPI(title="scrkit teleop service", lifespan=lifespan)

    @app.get("/state")
    async def get_state() -> dict:
        return session.snapshot()

    @app.get("/config")
    async def get_config() -> dict:
        return asdict(config)

    @app.websocket("/teleop")
    async def teleop_socket(ws: WebSocket) -> None:
        await ws.accept()
        queue: asyncio.Queue = asyncio.Queue()
        clients.add(queue)

        async def push_frames() -> None:
            while True:
                await ws.send_json(await queue.get())

        sender = asyncio.create_task(push_frames())
        try:
            while True:
                text = await ws.receive_text()
                try:
                    session.submit(parse_input_message(json.loads(text)))
                except (ValueError, json.JSONDecodeError) as exc:
                    await ws.send_json({"type": "error", "message": str(exc)})
        except WebSocketDisconnect:
            pass
        finally:
            clients.discard(queue)
            sender.cancel()
            with contextlib.suppress(asyncio.CancelledError):
                await sender

    if ui_dir and Path(ui_dir).is_dir():
        app.mount("/", StaticFiles(directory=ui_dir, html=True), name="ui")
    else:

        @app.get("/")
        async def placeholder() -> HTMLResponse:
            return HTMLResponse(_PLACEHOLDER_PAGE)

    return app
