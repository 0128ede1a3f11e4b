"""Bundled in-process mock of the legacy search API.

Serves a fixed status corpus over real HTTP on localhost with bearer
authentication, max_id cursor pagination, and per-window rate limiting.
The clock is injectable: sharing a fake clock between this server and a
collector under test makes pacing deterministic and instant. Every
request is appended to ``request_log`` for transcript assertions.
"""

from __future__ import annotations

import base64
import json
import threading
import time
from dataclasses import dataclass, field
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from typing import Callable
from urllib.parse import parse_qs, quote, urlparse

TOKEN_PATH = "/oauth2/token"
SEARCH_PATH = "/search/tweets.json"


@dataclass
class RequestRecord:
    sim_time: float
    path: str
    status: int
    max_id: int | None = None


@dataclass
class MockSearchApi:
    """Scripted search endpoint backed by a list of raw status dicts."""

    statuses: list[dict] = field(default_factory=list)
    window_limit: int = 180
    window_seconds: float = 900.0
    token: str = "MOCK-BEARER-TOKEN"
    clock: Callable[[], float] = time.time
    fail_first: int = 0  # respond HTTP 503 to this many search requests
    preexhausted: bool = False  # start with the current window already spent
    expected_key: str | None = None  # when set, token requests must match
    expected_secret: str | None = None

    def __post_init__(self) -> None:
        self._ordered = sorted(self.statuses,
                               key=lambda s: -int(s.get("id_str", s.get("id"))))
        self.request_log: list[RequestRecord] = []
        self._window_end: float | None = None
        self._window_used = 0
        self._failures_left = self.fail_first
        self._lock = threading.Lock()
        self._httpd: ThreadingHTTPServer | None = None
        self._thread: threading.Thread | None = None

    # -- lifecycle ---------------------------------------------------------

    def start(self) -> str:
        """Bind to an ephemeral localhost port; returns the base URL."""
        api = self

        class Handler(BaseHTTPRequestHandler):
            def log_message(self, *args):  # keep test output quiet
                pass

            def do_POST(self):
                api._handle_token(self)

            def do_GET(self):
                api._handle_search(self)

        self._httpd = ThreadingHTTPServer(("127.0.0.1", 0), Handler)
        self._thread = threading.Thread(target=self._httpd.serve_forever, daemon=True)
        self._thread.start()
        host, port = self._httpd.server_address
        return f"http://{host}:{port}"

    def stop(self) -> None:
        if self._httpd is not None:
            self._httpd.shutdown()
            self._httpd.server_close()
        if self._thread is not None:
            self._thread.join(timeout=5)

    def __enter__(self) -> str:
        return self.start()

    def __exit__(self, *exc) -> None:
        self.stop()

    # -- accounting --------------------------------------------------------

    def search_windows(self) -> list[int]:
        """Served (non-429) search requests per simulated window."""
        times = sorted(r.sim_time for r in self.request_log
                       if r.path == SEARCH_PATH and r.status == 200)
        if not times:
            return []
        start = times[0]
        counts: dict[int, int] = {}
        for t in times:
            counts[int((t - start) // self.window_seconds)] = \
                counts.get(int((t - start) // self.window_seconds), 0) + 1
        return [counts.get(i, 0) for i in range(max(counts) + 1)]

    def _tick_window(self) -> tuple[bool, float]:
        """Advance window bookkeeping; returns (allowed, window_end)."""
        now = self.clock()
        if self._window_end is None or now >= self._window_end:
            self._window_end = now + self.window_seconds
            self._window_used = self.window_limit if self.preexhausted else 0
            self.preexhausted = False
        if self._window_used >= self.window_limit:
            return False, self._window_end
        self._window_used += 1
        return True, self._window_end

    # -- handlers ----------------------------------------------------------

    def _send(self, handler, status: int, payload: dict, headers: dict | None = None) -> None:
        body = json.dumps(payload).encode("utf-8")
        handler.send_response(status)
        handler.send_header("Content-Type", "application/json")
        handler.send_header("Content-Length", str(len(body)))
        for name, value in (headers or {}).items():
            handler.send_header(name, value)
        handler.end_headers()
        handler.wfile.write(body)

    def _handle_token(self, handler) -> None:
        if urlparse(handler.path).path != TOKEN_PATH:
            self._send(handler, 404, {"error": "unknown endpoint"})
            return
        auth = handler.headers.get("Authorization", "")
        ok = False
        if auth.startswith("Basic "):
            try:
                decoded = base64.b64decode(auth[len("Basic "):]).decode("utf-8")
                ok = ":" in decoded and all(decoded.split(":", 1))
            except Exception:
                ok = False
        if ok and self.expected_key is not None:
            expected = f"{quote(self.expected_key, safe='')}:{quote(self.expected_secret or '', safe='')}"
            ok = decoded == expected
        with self._lock:
            self.request_log.append(RequestRecord(self.clock(), TOKEN_PATH,
                                                  200 if ok else 403))
        if not ok:
            self._send(handler, 403, {"errors": [{"message": "bad credentials"}]})
            return
        self._send(handler, 200, {"token_type": "bearer", "access_token": self.token})

    def _handle_search(self, handler) -> None:
        url = urlparse(handler.path)
        if url.path != SEARCH_PATH:
            self._send(handler, 404, {"error": "unknown endpoint"})
            return
        params = parse_qs(url.query)
        max_id = int(params["max_id"][0]) if "max_id" in params else None

        if handler.headers.get("Authorization") != f"Bearer {self.token}":
            with self._lock:
                self.request_log.append(RequestRecord(self.clock(), SEARCH_PATH, 401, max_id))
            self._send(handler, 401, {"errors": [{"message": "bad token"}]})
            return

        with self._lock:
            if self._failures_left > 0:
                self._failures_left -= 1
                self.request_log.append(RequestRecord(self.clock(), SEARCH_PATH, 503, max_id))
                self._send(handler, 503, {"errors": [{"message": "over capacity"}]})
                return
            allowed, window_end = self._tick_window()
            remaining = max(0, self.window_limit - self._window_used)
            status = 200 if allowed else 429
            self.request_log.append(RequestRecord(self.clock(), SEARCH_PATH, status, max_id))

        headers = {
            "x-rate-limit-limit": str(self.window_limit),
            "x-rate-limit-remaining": str(remaining),
            "x-rate-limit-reset": str(window_end),
        }
        if not allowed:
            self._send(handler, 429, {"errors": [{"message": "rate limit exceeded"}]},
                       headers)
            return

        count = int(params.get("count", ["100"])[0])
        page = [s for s in self._ordered
                if max_id is None or int(s.get("id_str", s.get("id"))) <= max_id][:count]
        self._send(handler, 200, {"statuses": page}, headers)


class FakeClock:
    """Deterministic clock whose sleep() simply advances time."""

    def __init__(self, start: float = 1_600_000_000.0):
        self.now = start
        self.sleeps: list[float] = []

    def time(self) -> float:
        return self.now

    def sleep(self, seconds: float) -> None:
        self.sleeps.append(seconds)
        self.now += max(0.0, seconds)
