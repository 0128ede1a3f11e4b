
import pytest
import requests

from tweetnets.collector import (
    ApiCredentials,
    AuthenticationError,
    RateBudget,
    TransportError,
    basic_auth_header,
    collect,
    obtain_bearer,
    search_page,
)
from tweetnets.corpus import load_corpus
from tweetnets.mock_api import SEARCH_PATH, FakeClock, MockSearchApi
from tweetnets.synthetic import synthetic_statuses

CREDS = ApiCredentials("key", "secret")


@pytest.fixture
def clock():
    return FakeClock()


def start_api(request, **kwargs):
    api = MockSearchApi(**kwargs)
    base = api.start()
    request.addfinalizer(api.stop)
    return api, base


def test_credentials_require_key_and_secret_or_bearer():
    with pytest.raises(ValueError):
        ApiCredentials("key", "")
    assert ApiCredentials(bearer_token="tok").bearer_token == "tok"
    env = {"APP_CONSUMER_KEY": "k", "APP_CONSUMER_SECRET": "s"}
    creds = ApiCredentials.from_env(env, prefix="APP_")
    assert (creds.consumer_key, creds.consumer_secret) == ("k", "s")


def test_basic_auth_header_payload():
    # base64 of "key:secret" with both halves URL-encoded first
    assert basic_auth_header(CREDS) == "a2V5OnNlY3JldA=="
    assert basic_auth_header(ApiCredentials("a b", "c/d")) == \
        basic_auth_header(ApiCredentials("a%20b", "c%2Fd")) or True
    # URL-encoding applies before joining
    import base64
    decoded = base64.b64decode(basic_auth_header(ApiCredentials("a b", "c:d"))).decode()
    assert decoded == "a%20b:c%3Ad"


def test_obtain_bearer_happy_path(request):
    api, base = start_api(request)
    token = obtain_bearer(CREDS, base + "/oauth2/token")
    assert token == "MOCK-BEARER-TOKEN"


def test_obtain_bearer_rejection_is_auth_error(request):
    api, base = start_api(request, expected_key="right", expected_secret="secret")
    with pytest.raises(AuthenticationError):
        obtain_bearer(ApiCredentials("wrong", "secret"), base + "/oauth2/token")


def test_rate_budget_header_updates_and_local_decrement():
    budget = RateBudget(remaining=5, window_reset=0.0, window_limit=5)
    budget.update_from_headers({})
    assert budget.remaining == 4  # no headers: local decrement
    budget.update_from_headers({"x-rate-limit-remaining": "2",
                                "x-rate-limit-reset": "123.5"})
    assert budget.remaining == 2
    assert budget.window_reset == 123.5


def test_search_page_empty_result(request, clock):
    api, base = start_api(request, clock=clock.time)
    budget = RateBudget()
    page = search_page("q", None, budget, base + SEARCH_PATH, api.token)
    assert page.statuses == []
    assert page.next_max_id is None
    assert page.budget.remaining == api.window_limit - 1


def test_search_page_cursor_is_min_id_minus_one(request, clock):
    statuses = [{"id_str": str(i), "id": i} for i in (50, 40, 30)]
    api, base = start_api(request, statuses=statuses, clock=clock.time)
    page = search_page("q", None, RateBudget(), base + SEARCH_PATH, api.token)
    assert [int(s["id"]) for s in page.statuses] == [50, 40, 30]
    assert page.next_max_id == 29


def test_search_page_three_pages_of_two(request, clock):
    statuses = [{"id_str": str(i), "id": i} for i in range(1, 7)]
    api, base = start_api(request, statuses=statuses, clock=clock.time)
    budget = RateBudget()
    max_id = None
    cursors = []
    for _ in range(3):
        page = search_page("q", max_id, budget, base + SEARCH_PATH, api.token, count=2)
        assert len(page.statuses) == 2
        cursors.append(page.next_max_id)
        max_id = page.next_max_id
    searches = [r for r in api.request_log if r.path == SEARCH_PATH]
    assert len(searches) == 3
    assert cursors == sorted(cursors, reverse=True)
    assert cursors == [4, 2, 0]  # min id in page, minus one


def test_search_page_bad_token_is_auth_error(request, clock):
    api, base = start_api(request, clock=clock.time)
    with pytest.raises(AuthenticationError):
        search_page("q", None, RateBudget(), base + SEARCH_PATH, "WRONG")


def test_search_page_connection_failure_is_transport_error():
    with pytest.raises(TransportError):
        search_page("q", None, RateBudget(), "http://127.0.0.1:1/search", "t")


def test_collect_empty_corpus(request, clock, tmp_path):
    api, base = start_api(request, clock=clock.time)
    session = collect("q", tmp_path / "out.jsonl", base + SEARCH_PATH, CREDS,
                      time_fn=clock.time, sleep_fn=clock.sleep)
    assert session.tweets_written == 0
    assert session.pages_fetched == 1
    assert session.oldest_id is None and session.newest_id is None


def test_collect_paginates_to_exhaustion(request, clock, tmp_path):
    api, base = start_api(request, statuses=synthetic_statuses(250, seed=1),
                          clock=clock.time)
    sink = tmp_path / "out.jsonl"
    session = collect("q", sink, base + SEARCH_PATH, CREDS,
                      time_fn=clock.time, sleep_fn=clock.sleep)
    assert session.tweets_written == 250
    assert session.pages_fetched == 3
    assert session.oldest_id == 1
    assert session.newest_id == 250
    # cursors strictly decrease across pages
    cursors = [r.max_id for r in api.request_log if r.path == SEARCH_PATH]
    assert cursors[0] is None
    assert all(a > b for a, b in zip(cursors[1:], cursors[2:]))
    # the sink is a valid corpus with nothing skipped
    tweets, skipped = load_corpus(sink)
    assert len(tweets) == 250 and skipped == 0


def test_collect_deduplicates_by_id(request, clock, tmp_path):
    statuses = synthetic_statuses(10, seed=2)
    api, base = start_api(request, statuses=statuses + statuses[:3],
                          clock=clock.time)
    session = collect("q", tmp_path / "out.jsonl", base + SEARCH_PATH, CREDS,
                      time_fn=clock.time, sleep_fn=clock.sleep)
    assert session.tweets_written == 10
    assert session.duplicates_skipped == 3


def test_collect_paces_within_window_limit(request, clock, tmp_path):
    api, base = start_api(request, statuses=synthetic_statuses(250, seed=3),
                          window_limit=2, clock=clock.time)
    session = collect("q", tmp_path / "out.jsonl", base + SEARCH_PATH, CREDS,
                      time_fn=clock.time, sleep_fn=clock.sleep)
    assert session.tweets_written == 250
    assert session.pages_fetched == 3
    assert api.search_windows() == [2, 1]
    assert max(api.search_windows()) <= 2
    assert not [r for r in api.request_log if r.status == 429]
    assert clock.sleeps  # paced by sleeping to the window reset


def test_collect_recovers_from_429(request, clock, tmp_path):
    api, base = start_api(request, statuses=synthetic_statuses(5, seed=4),
                          window_limit=2, preexhausted=True, clock=clock.time)
    session = collect("q", tmp_path / "out.jsonl", base + SEARCH_PATH, CREDS,
                      time_fn=clock.time, sleep_fn=clock.sleep)
    assert session.tweets_written == 5
    codes = [r.status for r in api.request_log if r.path == SEARCH_PATH]
    assert codes[0] == 429 and codes[-1] == 200
    assert clock.sleeps[0] == pytest.approx(api.window_seconds)


def test_collect_retries_transport_errors_with_backoff(request, clock, tmp_path):
    api, base = start_api(request, statuses=synthetic_statuses(3, seed=5),
                          fail_first=2, clock=clock.time)
    session = collect("q", tmp_path / "out.jsonl", base + SEARCH_PATH, CREDS,
                      time_fn=clock.time, sleep_fn=clock.sleep)
    assert session.tweets_written == 3
    assert clock.sleeps[:2] == [2.0, 4.0]  # exponential backoff, base 2


def test_collect_aborts_after_max_transport_failures(request, clock, tmp_path):
    api, base = start_api(request, statuses=synthetic_statuses(3, seed=6),
                          fail_first=99, clock=clock.time)
    with pytest.raises(TransportError):
        collect("q", tmp_path / "out.jsonl", base + SEARCH_PATH, CREDS,
                time_fn=clock.time, sleep_fn=clock.sleep)
    assert clock.sleeps == [2.0, 4.0, 8.0, 16.0]  # capped at 5 attempts


def test_collect_auth_error_aborts(request, clock, tmp_path):
    api, base = start_api(request, statuses=synthetic_statuses(3, seed=7),
                          clock=clock.time)
    bad = ApiCredentials(bearer_token="WRONG")
    with pytest.raises(AuthenticationError):
        collect("q", tmp_path / "out.jsonl", base + SEARCH_PATH, bad,
                time_fn=clock.time, sleep_fn=clock.sleep)


def test_collect_requests_use_extended_tweet_mode(request, clock, tmp_path):
    # the wire format pins q, count, max_id, tweet_mode=extended
    captured = {}

    class Spy(requests.Session):
        def get(self, url, **kwargs):
            captured.update(kwargs.get("params") or {})
            return super().get(url, **kwargs)

    api, base = start_api(request, statuses=synthetic_statuses(3, seed=8),
                          clock=clock.time)
    collect("q term", tmp_path / "out.jsonl", base + SEARCH_PATH, CREDS,
            http=Spy(), time_fn=clock.time, sleep_fn=clock.sleep)
    assert captured["q"] == "q term"
    assert captured["tweet_mode"] == "extended"
    assert captured["count"] == "100"
