/** WebSocket client: sends input on change plus a 20 Hz heartbeat. */

import { encodeInput, InputState, NEUTRAL_INPUT, parseFrame, StateFrame } from "./protocol.js";
import { Connection } from "./store.js";

export const HEARTBEAT_MS = 50; // 20 Hz keepalive resend of the held input

// handler params are any so both browser and node WebSocket objects fit
export interface SocketLike {
  readonly readyState: number;
  send(data: string): void;
  close(): void;
  onopen: ((ev?: any) => void) | null;
  onclose: ((ev?: any) => void) | null;
  onmessage: ((ev: any) => void) | null;
  onerror: ((ev?: any) => void) | null;
}

export type SocketFactory = (url: string) => SocketLike;

export interface ClientHandlers {
  onFrame(frame: StateFrame): void;
  onConnection(connection: Connection): void;
}

const SOCKET_OPEN = 1;

export class TeleopClient {
  private socket: SocketLike | null = null;
  private heartbeat: ReturnType<typeof setInterval> | null = null;
  private input: InputState = { ...NEUTRAL_INPUT, joystick: { ...NEUTRAL_INPUT.joystick } };
  private closed = false;

  constructor(
    private readonly url: string,
    private readonly handlers: ClientHandlers,
    private readonly makeSocket: SocketFactory,
    private readonly reconnectDelayMs = 1000,
  ) {}

  connect(): void {
    this.closed = false;
    this.handlers.onConnection("connecting");
    const socket = this.makeSocket(this.url);
    this.socket = socket;
    socket.onopen = () => {
      this.handlers.onConnection("connected");
      this.send(); // announce the current input right away
      this.heartbeat = setInterval(() => this.send(), HEARTBEAT_MS);
    };
    socket.onmessage = (event) => {
      const frame = parseFrame(String(event.data));
      if (frame) this.handlers.onFrame(frame);
    };
    socket.onerror = () => {
      // the close handler owns reconnection
    };
    socket.onclose = () => {
      this.stopHeartbeat();
      this.socket = null;
      this.handlers.onConnection("disconnected");
      if (!this.closed && this.reconnectDelayMs > 0) {
        setTimeout(() => {
          if (!this.closed) this.connect();
        }, this.reconnectDelayMs);
      }
    };
  }

  /** Hold a new input; it is sent immediately and kept alive by the heartbeat. */
  setInput(input: InputState): void {
    this.input = { ...input, joystick: { ...input.joystick } };
    this.send();
  }

  currentInput(): InputState {
    return { ...this.input, joystick: { ...this.input.joystick } };
  }

  close(): void {
    this.closed = true;
    this.stopHeartbeat();
    this.socket?.close();
    this.socket = null;
  }

  private send(): void {
    if (this.socket && this.socket.readyState === SOCKET_OPEN) {
      this.socket.send(encodeInput(this.input));
    }
  }

  private stopHeartbeat(): void {
    if (this.heartbeat !== null) {
      clearInterval(this.heartbeat);
      this.heartbeat = null;
    }
  }
}
