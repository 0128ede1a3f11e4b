"""JSON-lines tweet corpora: parsing, streaming, and corpus statistics.

One status per line, UTF-8. Field mapping from the platform schema:
``id_str``/``id`` -> id, ``full_text`` else ``text`` -> text,
``user.{id_str,screen_name,followers_count,friends_count}`` -> author,
``entities.hashtags[].text`` -> hashtags, ``retweeted_status`` ->
retweet_of (one level), ``created_at`` -> UTC epoch seconds, ``lang``.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass
from datetime import datetime, timedelta, timezone
from pathlib import Path
from typing import Iterable, Iterator

log = logging.getLogger(__name__)

# "Wed Oct 10 20:19:24 +0000 2018"
_TEXTUAL_DATE = "%a %b %d %H:%M:%S %z %Y"


class TweetParseError(ValueError):
    """A line could not be turned into a Tweet. Carries the line number."""

    def __init__(self, message: str, line_number: int | None = None):
        super().__init__(message)
        self.line_number = line_number


@dataclass(frozen=True)
class UserRef:
    id: int
    screen_name: str
    followers_count: int = 0
    friends_count: int = 0


@dataclass(frozen=True)
class Tweet:
    id: int
    created_at: int  # UTC epoch seconds
    text: str
    author: UserRef
    hashtags: tuple[str, ...] = ()
    lang: str | None = None
    retweet_of: "Tweet | None" = None

    @property
    def is_retweet(self) -> bool:
        return self.retweet_of is not None


@dataclass(frozen=True)
class TimelineSeries:
    """Tweet counts per ``bin_width``-second bin, aligned to the epoch."""

    bin_width: int
    bins: tuple[tuple[int, int], ...]  # (bin_start, count), strictly ascending

    def total(self) -> int:
        return sum(count for _, count in self.bins)


@dataclass(frozen=True)
class OverlapReport:
    """Containment of a candidate id set in a reference id set.

    Missing fractions are taken over ``reference - candidate`` and
    partition the missing tweets into originals and retweets.
    """

    reference_size: int
    candidate_size: int
    shared: int
    containment: float
    missing_original_fraction: float
    missing_retweet_fraction: float


def parse_created_at(value: object) -> int:
    """Parse the platform's textual date or ISO-8601 into UTC epoch seconds."""
    if not isinstance(value, str) or not value.strip():
        raise TweetParseError(f"bad created_at: {value!r}")
    text = value.strip()
    try:
        dt = datetime.strptime(text, _TEXTUAL_DATE)
    except ValueError:
        try:
            dt = datetime.fromisoformat(text.replace("Z", "+00:00"))
        except ValueError:
            raise TweetParseError(f"unrecognized created_at format: {value!r}") from None
    if dt.tzinfo is None:
        dt = dt.replace(tzinfo=timezone.utc)
    return int(dt.timestamp())


def _parse_user(raw: object) -> UserRef:
    if not isinstance(raw, dict):
        raise TweetParseError("missing or malformed user object")
    uid = raw.get("id_str", raw.get("id"))
    if uid is None:
        raise TweetParseError("user has no id")
    screen_name = raw.get("screen_name") or ""
    if not screen_name:
        raise TweetParseError("user has no screen_name")
    return UserRef(
        id=int(uid),
        screen_name=screen_name,
        followers_count=int(raw.get("followers_count") or 0),
        friends_count=int(raw.get("friends_count") or 0),
    )


def _parse_hashtags(raw: object) -> tuple[str, ...]:
    if not isinstance(raw, dict):
        return ()
    tags = []
    for entry in raw.get("hashtags") or ():
        if not isinstance(entry, dict):
            continue
        text = str(entry.get("text") or "").lstrip("#")
        if text and not any(ch.isspace() for ch in text):
            tags.append(text)
    return tuple(tags)


def _parse_status(status: dict, line_number: int | None, nested: bool) -> Tweet:
    tid = status.get("id_str", status.get("id"))
    if tid is None:
        raise TweetParseError("status has no id", line_number)
    if "created_at" not in status:
        raise TweetParseError("status has no created_at", line_number)
    text = status.get("full_text", status.get("text"))
    if text is None:
        raise TweetParseError("status has no text", line_number)

    retweet_of = None
    if not nested:
        nested_status = status.get("retweeted_status")
        if isinstance(nested_status, dict):
            retweet_of = _parse_status(nested_status, line_number, nested=True)

    try:
        tweet_id = int(tid)
    except (TypeError, ValueError):
        raise TweetParseError(f"bad status id: {tid!r}", line_number) from None
    if tweet_id <= 0:
        raise TweetParseError(f"bad status id: {tid!r}", line_number)

    return Tweet(
        id=tweet_id,
        created_at=parse_created_at(status["created_at"]),
        text=str(text),
        author=_parse_user(status.get("user")),
        hashtags=_parse_hashtags(status.get("entities")),
        lang=status.get("lang"),
        retweet_of=retweet_of,
    )


def parse_tweet(line: str, line_number: int | None = None) -> Tweet:
    """Parse one JSONL status line. Unknown extra fields are ignored.

    Raises TweetParseError (with the supplied line number) for malformed
    JSON, a missing mandatory field (id, user, created_at, text), or an
    unrecognized date format. The nested retweeted status, when present,
    is parsed one level deep.
    """
    try:
        status = json.loads(line)
    except json.JSONDecodeError as exc:
        raise TweetParseError(f"malformed JSON: {exc}", line_number) from None
    if not isinstance(status, dict):
        raise TweetParseError("status line is not a JSON object", line_number)
    try:
        return _parse_status(status, line_number, nested=False)
    except TweetParseError as exc:
        if exc.line_number is None:
            exc.line_number = line_number
        raise


def serialize_tweet(tweet: Tweet) -> str:
    """Inverse of parse_tweet: one compact JSON status line."""
    return json.dumps(_status_dict(tweet), ensure_ascii=False, separators=(",", ":"))


def _status_dict(tweet: Tweet) -> dict:
    created = datetime.fromtimestamp(tweet.created_at, tz=timezone.utc)
    status = {
        "id_str": str(tweet.id),
        "id": tweet.id,
        "created_at": created.strftime("%a %b %d %H:%M:%S +0000 %Y"),
        "full_text": tweet.text,
        "user": {
            "id_str": str(tweet.author.id),
            "id": tweet.author.id,
            "screen_name": tweet.author.screen_name,
            "followers_count": tweet.author.followers_count,
            "friends_count": tweet.author.friends_count,
        },
        "entities": {"hashtags": [{"text": t} for t in tweet.hashtags]},
    }
    if tweet.lang is not None:
        status["lang"] = tweet.lang
    if tweet.retweet_of is not None:
        status["retweeted_status"] = _status_dict(tweet.retweet_of)
    return status


class CorpusReader:
    """Streams tweets from a JSONL file without loading it into memory.

    Bad lines are logged, counted in ``skipped``, and never abort the
    run; the count is final once iteration completes. A reader instance
    is single-consumer.
    """

    def __init__(self, path: str | Path):
        self.path = Path(path)
        self.skipped = 0
        if not self.path.exists():
            raise FileNotFoundError(self.path)

    def __iter__(self) -> Iterator[Tweet]:
        with open(self.path, encoding="utf-8") as fh:
            for line_number, line in enumerate(fh, start=1):
                if not line.strip():
                    continue
                try:
                    yield parse_tweet(line, line_number)
                except TweetParseError as exc:
                    self.skipped += 1
                    log.warning("%s:%d skipped: %s", self.path, line_number, exc)


def read_corpus(path: str | Path) -> CorpusReader:
    """Open a JSONL corpus for streaming; see CorpusReader."""
    return CorpusReader(path)


def load_corpus(path: str | Path) -> tuple[list[Tweet], int]:
    """Eager variant of read_corpus: (tweets, skipped_line_count)."""
    reader = read_corpus(path)
    tweets = list(reader)
    return tweets, reader.skipped


def timeline(tweets: Iterable[Tweet], bin_width: int | timedelta = 3600) -> TimelineSeries:
    """Histogram of tweet counts over time.

    Bin starts are aligned to multiples of ``bin_width`` since the epoch;
    interior bins with no tweets are present with count 0. Retweets count
    at their own timestamp, not the original's.
    """
    if isinstance(bin_width, timedelta):
        width = int(bin_width.total_seconds())
    else:
        width = int(bin_width)
    if width <= 0:
        raise ValueError("bin_width must be positive")

    counts: dict[int, int] = {}
    for tweet in tweets:
        start = (tweet.created_at // width) * width
        counts[start] = counts.get(start, 0) + 1
    if not counts:
        return TimelineSeries(bin_width=width, bins=())
    lo, hi = min(counts), max(counts)
    bins = tuple((start, counts.get(start, 0)) for start in range(lo, hi + width, width))
    return TimelineSeries(bin_width=width, bins=bins)


def overlap(reference_ids: Iterable[int], candidate_ids: Iterable[int],
            reference_tweets: Iterable[Tweet] = ()) -> OverlapReport:
    """How much of the reference id set the candidate set contains.

    ``reference_tweets`` must cover the reference ids; it is used to
    classify each missing tweet as an original or a retweet. An empty
    reference yields containment 0, and all fractions are 0 when their
    denominator is empty.
    """
    reference = set(reference_ids)
    candidate = set(candidate_ids)
    shared = reference & candidate
    missing = reference - candidate

    containment = len(shared) / len(reference) if reference else 0.0

    missing_retweets = 0
    missing_originals = 0
    if missing:
        is_retweet = {t.id: t.is_retweet for t in reference_tweets}
        for tweet_id in missing:
            if is_retweet.get(tweet_id, False):
                missing_retweets += 1
            else:
                missing_originals += 1
    denom = len(missing)
    return OverlapReport(
        reference_size=len(reference),
        candidate_size=len(candidate),
        shared=len(shared),
        containment=containment,
        missing_original_fraction=missing_originals / denom if denom else 0.0,
        missing_retweet_fraction=missing_retweets / denom if denom else 0.0,
    )
