#!/usr/bin/env python3
"""Collection against the bundled mock endpoint, with rate-limit pacing.

The mock serves a 500-status corpus over real HTTP with a budget of 3
requests per 15-minute window; the collector authenticates, pages the
cursor down, and sleeps through window resets. A fake clock makes the
15-minute waits instant and deterministic.
"""

import tempfile
from pathlib import Path

from tweetnets import ApiCredentials, collect, load_corpus
from tweetnets.mock_api import SEARCH_PATH, FakeClock, MockSearchApi
from tweetnets.synthetic import synthetic_statuses

clock = FakeClock()
api = MockSearchApi(statuses=synthetic_statuses(500, seed=31),
                    window_limit=3, clock=clock.time)
base_url = api.start()
print(f"mock search endpoint at {base_url}{SEARCH_PATH} "
      f"(budget: {api.window_limit} requests / {api.window_seconds:.0f}s)")

sink = Path(tempfile.mkdtemp(prefix="tweetnets-collect-")) / "collected.jsonl"
session = collect(
    query="ballot",
    sink=sink,
    endpoint=base_url + SEARCH_PATH,
    credentials=ApiCredentials("demo-key", "demo-secret"),
    time_fn=clock.time,
    sleep_fn=clock.sleep,
)
api.stop()

print(f"\nsession: {session.pages_fetched} pages, {session.tweets_written} tweets, "
      f"{session.duplicates_skipped} duplicates, ids {session.oldest_id}..{session.newest_id}")
print(f"slept through {len(clock.sleeps)} window resets "
      f"({sum(clock.sleeps):.0f} simulated seconds)")
print(f"requests per window: {api.search_windows()} (limit {api.window_limit})")

tweets, skipped = load_corpus(sink)
print(f"the sink re-parses cleanly: {len(tweets)} tweets, {skipped} skipped")
