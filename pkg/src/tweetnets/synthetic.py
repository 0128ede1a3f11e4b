"""Deterministic synthetic tweet corpora for demos and desk-scale tests.

Real collections are not reproducible (the historical endpoint is gone),
so fixtures are generated: a seeded mix of originals and retweets with
mixed-case hashtags, varying follower counts, and a few self-retweets.
"""

from __future__ import annotations

import json
import random
from pathlib import Path

from .corpus import Tweet, UserRef, serialize_tweet

TAG_POOL = (
    "ballot", "Ballot", "BALLOT", "turnout", "polls", "Polls",
    "debate", "exitpoll", "count", "recount",
)
LANGS = ("en", "en", "en", "de", "fr", None)


def synthetic_tweets(n: int, seed: int = 0, n_users: int = 12,
                     retweet_fraction: float = 0.6,
                     start: int = 1_700_000_000, span: int = 48 * 3600) -> list[Tweet]:
    """A corpus of ``n`` tweets, reproducible for a given seed."""
    rng = random.Random(seed)
    users = [UserRef(id=100 + i, screen_name=f"user{i}",
                     followers_count=50 * (i + 1), friends_count=20 * (i + 1))
             for i in range(n_users)]
    tweets: list[Tweet] = []
    originals: list[Tweet] = []
    next_nested_id = 10 * n + 1000

    for i in range(1, n + 1):
        author = rng.choice(users)
        created = start + rng.randrange(span)
        # follower counts drift over a collection; downstream keeps the latest
        author = UserRef(author.id, author.screen_name,
                         author.followers_count + created % 97,
                         author.friends_count)
        tags = tuple(rng.sample(TAG_POOL, rng.randrange(0, 4)))
        lang = rng.choice(LANGS)

        retweet_of = None
        if originals and rng.random() < retweet_fraction:
            if rng.random() < 0.7:
                retweet_of = rng.choice(originals)
            else:
                # retweet of a status that is not itself a corpus line
                orig_author = rng.choice(users)
                retweet_of = Tweet(
                    id=next_nested_id, created_at=created - rng.randrange(1, 3600),
                    text=f"offsite original {next_nested_id}", author=orig_author,
                    hashtags=tuple(rng.sample(TAG_POOL, rng.randrange(0, 3))),
                    lang=rng.choice(LANGS))
                next_nested_id += 1
            if rng.random() < 0.05:
                # occasional self-retweet; builders must skip these
                retweet_of = Tweet(
                    id=next_nested_id, created_at=created - 10,
                    text="self echo", author=author, hashtags=())
                next_nested_id += 1

        tweet = Tweet(id=i, created_at=created,
                      text=f"tweet {i} " + " ".join("#" + t for t in tags),
                      author=author, hashtags=tags, lang=lang,
                      retweet_of=retweet_of)
        tweets.append(tweet)
        if retweet_of is None:
            originals.append(tweet)
    return tweets


def synthetic_statuses(n: int, seed: int = 0, **kwargs) -> list[dict]:
    """The same corpus in raw platform-schema dict form (mock server food)."""
    return [json.loads(serialize_tweet(t)) for t in synthetic_tweets(n, seed, **kwargs)]


def write_corpus(tweets: list[Tweet], path: str | Path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for tweet in tweets:
            fh.write(serialize_tweet(tweet) + "\n")
