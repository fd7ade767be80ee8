import json
import math

import pytest
from fastapi.testclient import TestClient

from scrkit.service import TeleopSession, create_app, parse_input_message, state_frame
from scrkit.teleop import DriveSwitch, RobotMode, SimConfig, TeleopInput, reset


def test_parse_input_message_accepts_protocol_frame():
    command = parse_input_message(
        {"type": "input", "joystick": {"x": 0.5, "y": -0.25}, "switch": "fwd", "mode": "ssr"}
    )
    assert command.joystick_x == 0.5
    assert command.joystick_y == -0.25
    assert command.drive_switch is DriveSwitch.FORWARD
    assert command.mode is RobotMode.SSR


def test_parse_input_message_defaults_missing_fields():
    command = parse_input_message({"type": "input"})
    assert command == TeleopInput()


@pytest.mark.parametrize(
    "raw",
    [
        "not a dict",
        {"type": "state"},
        {"type": "input", "joystick": [1, 2]},
        {"type": "input", "joystick": {"x": "fast"}},
        {"type": "input", "joystick": {"x": True}},
        {"type": "input", "switch": "sideways"},
        {"type": "input", "mode": "flight"},
    ],
)
def test_parse_input_message_rejects_malformed(raw):
    with pytest.raises(ValueError):
        parse_input_message(raw)


def test_state_frame_schema():
    config = SimConfig()
    frame = state_frame(reset(config), RobotMode.SCM, config.link_length)
    assert frame["type"] == "state"
    assert frame["v"] == 1
    assert frame["mode"] == "scm"
    assert frame["module_bends"] == [0.0, 0.0, 0.0, 0.0]
    assert frame["end_effector"] == {"x": pytest.approx(0.4), "y": 0.0, "z": 0.0}
    assert frame["ssr"] == {"x": 0.0, "y": 0.0, "heading": 0.0}
    assert frame["flags"] == {"clamped": False}
    json.dumps(frame)  # must be serializable as-is


def test_session_applies_queued_inputs_in_order_and_holds_last():
    session = TeleopSession(SimConfig())
    session.submit(parse_input_message({"type": "input", "joystick": {"x": -1.0}}))
    session.submit(parse_input_message({"type": "input", "joystick": {"x": 1.0}}))
    first = session.tick()
    assert first["module_bends"][0] > 0.0  # the last queued input won
    held = session.tick()  # no new messages: input is held
    assert held["module_bends"][0] > first["module_bends"][0]


def test_http_endpoints_report_state_and_config():
    app = create_app(config=SimConfig(tick_rate=100.0))
    with TestClient(app) as client:
        state = client.get("/state").json()
        assert state["type"] == "state"
        config = client.get("/config").json()
        assert config["tick_rate"] == 100.0
        assert config["wheel_radius"] == 0.035
        index = client.get("/")
        assert index.status_code == 200
        assert "scrkit" in index.text


def test_static_ui_dir_is_served(tmp_path):
    (tmp_path / "index.html").write_text("<html><body>console</body></html>")
    app = create_app(ui_dir=str(tmp_path))
    with TestClient(app) as client:
        assert "console" in client.get("/").text
        assert client.get("/state").json()["type"] == "state"


def test_websocket_full_stick_yields_monotone_yaw_bends():
    app = create_app(config=SimConfig(tick_rate=100.0))
    with TestClient(app) as client:
        with client.websocket_connect("/teleop") as ws:
            ws.send_text(
                json.dumps({"type": "input", "joystick": {"x": 1.0, "y": 0.0}})
            )
            bends = []
            while len(bends) < 40:
                frame = ws.receive_json()
                assert frame["type"] == "state"
                bends.append(frame["module_bends"][0])
            increasing = [b2 > b1 for b1, b2 in zip(bends, bends[1:]) if b2 != b1]
            assert bends[-1] > 0.0
            assert all(increasing)
            assert bends == sorted(bends)


def test_websocket_malformed_message_keeps_connection():
    app = create_app(config=SimConfig(tick_rate=100.0))
    with TestClient(app) as client:
        with client.websocket_connect("/teleop") as ws:
            ws.send_text("this is not json")
            frame = ws.receive_json()
            while frame["type"] == "state":
                frame = ws.receive_json()
            assert frame["type"] == "error"
            # the connection still carries state frames and accepts input
            ws.send_text(json.dumps({"type": "input", "joystick": {"x": 1.0}}))
            frame = ws.receive_json()
            while frame["type"] != "state":
                frame = ws.receive_json()
            assert frame["v"] == 1


def test_websocket_unknown_type_reports_error():
    app = create_app(config=SimConfig(tick_rate=100.0))
    with TestClient(app) as client:
        with client.websocket_connect("/teleop") as ws:
            ws.send_text(json.dumps({"type": "telemetry"}))
            frame = ws.receive_json()
            while frame["type"] == "state":
                frame = ws.receive_json()
            assert frame["type"] == "error"
            assert "telemetry" in frame["message"]


def test_two_clients_receive_identical_frames():
    app = create_app(config=SimConfig(tick_rate=100.0))
    with TestClient(app) as client:
        with client.websocket_connect("/teleop") as one:
            with client.websocket_connect("/teleop") as two:
                seen_one = {}
                seen_two = {}
                for _ in range(10):
                    frame = one.receive_json()
                    seen_one[frame["t"]] = frame
                    frame = two.receive_json()
                    seen_two[frame["t"]] = frame
                shared = set(seen_one) & set(seen_two)
                assert shared
                for t in shared:
                    assert seen_one[t] == seen_two[t]


def test_trajectory_log_written(tmp_path):
    log_path = tmp_path / "trajectory.csv"
    app = create_app(config=SimConfig(tick_rate=200.0), trajectory_log=str(log_path))
    with TestClient(app) as client:
        with client.websocket_connect("/teleop") as ws:
            for _ in range(5):
                ws.receive_json()
    lines = log_path.read_text().splitlines()
    assert lines[0].startswith("t_s,mode,x_m,y_m,heading_rad")
    assert len(lines) >= 3
