"""Search-API client: bearer auth, cursor pagination, rate-limit pacing.

The endpoint URL is configuration, not a constant; everything here runs
unchanged against the bundled mock server (tweetnets.mock_api). The
pacing clock and sleep function are injectable so pacing is testable
against a fake clock. One session keeps exactly one request in flight.
"""

from __future__ import annotations

import base64
import json
import logging
import time
from dataclasses import dataclass
from pathlib import Path
from typing import Callable
from urllib.parse import quote, urljoin

import requests

log = logging.getLogger(__name__)

DEFAULT_WINDOW_LIMIT = 180  # historical Search API budget per 15-minute window
DEFAULT_WINDOW_SECONDS = 900
PAGE_SIZE = 100
BACKOFF_BASE = 2.0
BACKOFF_CAP = 60.0
MAX_ATTEMPTS = 5


class CollectorError(Exception):
    pass


class AuthenticationError(CollectorError):
    """Credentials rejected (HTTP 401/403); not retryable."""


class ProtocolError(CollectorError):
    """The server answered with something that is not the expected schema."""


class TransportError(CollectorError):
    """Network-level failure after exhausting retries."""


class RateLimitError(CollectorError):
    """HTTP 429; carries the window reset time when the server sent one."""

    def __init__(self, message: str, reset_at: float | None = None):
        super().__init__(message)
        self.reset_at = reset_at


@dataclass
class ApiCredentials:
    consumer_key: str = ""
    consumer_secret: str = ""
    bearer_token: str | None = None

    def __post_init__(self) -> None:
        if self.bearer_token is None and not (self.consumer_key and self.consumer_secret):
            raise ValueError("need consumer key and secret, or a bearer token")

    @classmethod
    def from_env(cls, environ, prefix: str = "") -> "ApiCredentials":
        return cls(
            consumer_key=environ.get(f"{prefix}CONSUMER_KEY", ""),
            consumer_secret=environ.get(f"{prefix}CONSUMER_SECRET", ""),
            bearer_token=environ.get(f"{prefix}BEARER_TOKEN") or None,
        )


@dataclass
class RateBudget:
    remaining: int = DEFAULT_WINDOW_LIMIT
    window_reset: float = 0.0
    window_limit: int = DEFAULT_WINDOW_LIMIT

    def update_from_headers(self, headers) -> None:
        """Response headers are authoritative when present, else decrement."""
        remaining = headers.get("x-rate-limit-remaining")
        reset = headers.get("x-rate-limit-reset")
        if remaining is not None:
            self.remaining = int(remaining)
        else:
            self.remaining = max(0, self.remaining - 1)
        if reset is not None:
            self.window_reset = float(reset)
        limit = headers.get("x-rate-limit-limit")
        if limit is not None:
            self.window_limit = int(limit)
        self.remaining = min(self.remaining, self.window_limit)


@dataclass
class CollectionSession:
    query: str
    started_at: float = 0.0
    finished_at: float = 0.0
    pages_fetched: int = 0
    tweets_written: int = 0
    duplicates_skipped: int = 0
    oldest_id: int | None = None
    newest_id: int | None = None


@dataclass
class SearchPage:
    statuses: list[dict]
    next_max_id: int | None
    budget: RateBudget


def basic_auth_header(credentials: ApiCredentials) -> str:
    """Basic payload: base64 of "key:secret", both URL-encoded first."""
    pair = f"{quote(credentials.consumer_key, safe='')}:{quote(credentials.consumer_secret, safe='')}"
    return base64.b64encode(pair.encode("utf-8")).decode("ascii")


def obtain_bearer(credentials: ApiCredentials, auth_url: str,
                  http: requests.Session | None = None) -> str:
    """Exchange consumer key/secret for a bearer token (app-only auth)."""
    http = http or requests.Session()
    response = http.post(
        auth_url,
        headers={"Authorization": f"Basic {basic_auth_header(credentials)}"},
        data={"grant_type": "client_credentials"},
    )
    if response.status_code in (401, 403):
        raise AuthenticationError(f"authentication rejected: HTTP {response.status_code}")
    if response.status_code != 200:
        raise ProtocolError(f"token endpoint answered HTTP {response.status_code}")
    try:
        token = response.json().get("access_token")
    except (ValueError, AttributeError):
        token = None
    if not token:
        raise ProtocolError("token endpoint response carried no access_token")
    return token


def search_page(query: str, max_id: int | None, budget: RateBudget, endpoint: str,
                token: str, count: int = PAGE_SIZE,
                http: requests.Session | None = None) -> SearchPage:
    """Fetch one page of statuses older than ``max_id`` (when given).

    The cursor for the next page is (min id in page) - 1, absent when
    the page is empty. The budget is updated from rate-limit headers
    when the server sends them, else decremented locally.
    """
    http = http or requests.Session()
    params = {"q": query, "count": str(count), "tweet_mode": "extended"}
    if max_id is not None:
        params["max_id"] = str(max_id)
    try:
        response = http.get(endpoint, params=params,
                            headers={"Authorization": f"Bearer {token}"})
    except requests.RequestException as exc:
        raise TransportError(f"request failed: {exc}") from exc

    if response.status_code == 429:
        reset = response.headers.get("x-rate-limit-reset")
        budget.update_from_headers(response.headers)
        raise RateLimitError("rate limited", reset_at=float(reset) if reset else None)
    if response.status_code in (401, 403):
        raise AuthenticationError(f"search rejected: HTTP {response.status_code}")
    if response.status_code >= 500:
        raise TransportError(f"server error: HTTP {response.status_code}")
    if response.status_code != 200:
        raise ProtocolError(f"search endpoint answered HTTP {response.status_code}")

    budget.update_from_headers(response.headers)
    try:
        statuses = response.json()["statuses"]
    except (ValueError, KeyError):
        raise ProtocolError("search response carried no statuses array") from None
    ids = [int(s.get("id_str", s.get("id"))) for s in statuses]
    next_max_id = min(ids) - 1 if ids else None
    return SearchPage(statuses=statuses, next_max_id=next_max_id, budget=budget)


def collect(query: str, sink: str | Path, endpoint: str, credentials: ApiCredentials,
            auth_url: str | None = None, count: int = PAGE_SIZE,
            budget: RateBudget | None = None,
            http: requests.Session | None = None,
            time_fn: Callable[[], float] = time.time,
            sleep_fn: Callable[[float], None] = time.sleep) -> CollectionSession:
    """Page through the search endpoint until the corpus is exhausted.

    Statuses are appended to ``sink`` as JSONL, deduplicated by id
    within the session. When the rate budget runs out the collector
    sleeps until the window resets and resumes. Transport failures are
    retried with exponential backoff (base 2 s, cap 60 s, 5 attempts);
    authentication errors abort. Collection stops at the first page
    shorter than ``count`` (an exhausted cursor).
    """
    http = http or requests.Session()
    budget = budget or RateBudget()
    if auth_url is None:
        auth_url = urljoin(endpoint, "/oauth2/token")
    token = credentials.bearer_token or obtain_bearer(credentials, auth_url, http=http)

    session = CollectionSession(query=query, started_at=time_fn())
    seen: set[int] = set()
    max_id: int | None = None

    def paced_page() -> SearchPage:
        attempts = 0
        while True:
            now = time_fn()
            if budget.remaining <= 0 and now < budget.window_reset:
                wait = budget.window_reset - now
                log.info("rate budget exhausted; sleeping %.1f s", wait)
                sleep_fn(wait)
                budget.remaining = budget.window_limit
            try:
                return search_page(query, max_id, budget, endpoint, token,
                                   count=count, http=http)
            except RateLimitError as exc:
                reset = exc.reset_at if exc.reset_at is not None \
                    else time_fn() + DEFAULT_WINDOW_SECONDS
                wait = max(0.0, reset - time_fn())
                log.info("rate limited; sleeping %.1f s until window reset", wait)
                sleep_fn(wait)
                budget.remaining = budget.window_limit
            except TransportError:
                attempts += 1
                if attempts >= MAX_ATTEMPTS:
                    raise
                sleep_fn(min(BACKOFF_CAP, BACKOFF_BASE * 2 ** (attempts - 1)))

    with open(sink, "a", encoding="utf-8") as fh:
        while True:
            page = paced_page()
            session.pages_fetched += 1
            for status in page.statuses:
                status_id = int(status.get("id_str", status.get("id")))
                if status_id in seen:
                    session.duplicates_skipped += 1
                    continue
                seen.add(status_id)
                fh.write(json.dumps(status, ensure_ascii=False, separators=(",", ":")) + "\n")
                session.tweets_written += 1
                if session.oldest_id is None or status_id < session.oldest_id:
                    session.oldest_id = status_id
                if session.newest_id is None or status_id > session.newest_id:
                    session.newest_id = status_id
            if len(page.statuses) < count or page.next_max_id is None:
                break
            max_id = page.next_max_id

    session.finished_at = time_fn()
    return session
