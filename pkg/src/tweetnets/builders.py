"""Build retweet and hashtag co-occurrence networks from a tweet corpus.

Both builders are order-insensitive: permuting the input corpus yields
the identical graph. Attribute conflicts are resolved by the latest
observing status, evidence lists are sorted, and all weights are plain
occurrence counts.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable

from .corpus import Tweet
from .graph import Graph


@dataclass
class RetweetNetworkOptions:
    track_evidence: bool = True
    language_filter: str | None = None
    time_window: tuple[int, int] | None = None  # inclusive (start, end)

    def __post_init__(self) -> None:
        if self.time_window is not None:
            start, end = self.time_window
            if start > end:
                raise ValueError("time_window start must be <= end")


@dataclass
class HashtagNetworkOptions:
    case_fold: bool = True
    exclude_tags: frozenset[str] = field(default_factory=frozenset)
    min_cooccurrence: int = 1
    track_evidence: bool = True

    def __post_init__(self) -> None:
        if self.min_cooccurrence < 1:
            raise ValueError("min_cooccurrence must be >= 1")
        tags = (t.casefold() for t in self.exclude_tags) if self.case_fold else self.exclude_tags
        self.exclude_tags = frozenset(tags)


def _passes(tweet: Tweet, opts: RetweetNetworkOptions) -> bool:
    if opts.language_filter is not None and tweet.lang != opts.language_filter:
        return False
    if opts.time_window is not None:
        start, end = opts.time_window
        if not (start <= tweet.created_at <= end):
            return False
    return True


def build_retweet_network(tweets: Iterable[Tweet],
                          opts: RetweetNetworkOptions | None = None) -> Graph:
    """Directed network: an edge retweeter -> original author per retweet.

    Edge weight counts how often the retweeter retweeted that author;
    self-retweets are skipped. Node attributes (label, followers,
    friends) come from the latest status in which the user was seen.
    Weighted in-degree is "times retweeted", weighted out-degree "times
    retweeting".
    """
    opts = opts or RetweetNetworkOptions()
    g = Graph(directed=True)
    # node -> ((created_at, tweet_id), attrs); latest observation wins
    observed: dict[int, tuple[tuple[int, int], dict]] = {}

    def observe(user, stamp):
        attrs = {
            "label": user.screen_name,
            "followers": user.followers_count,
            "friends": user.friends_count,
        }
        prev = observed.get(user.id)
        if prev is None or stamp > prev[0]:
            observed[user.id] = (stamp, attrs)

    for tweet in tweets:
        original = tweet.retweet_of
        if original is None or not _passes(tweet, opts):
            continue
        if tweet.author.id == original.author.id:
            continue
        observe(tweet.author, (tweet.created_at, tweet.id))
        observe(original.author, (original.created_at, original.id))
        g.add_edge(tweet.author.id, original.author.id, weight=1,
                   tweet_id=tweet.id if opts.track_evidence else None)

    for node, (_, attrs) in observed.items():
        g.add_node(node, **attrs)
    for attrs in g.edges.values():
        attrs.tweet_ids.sort()
    return g


def build_hashtag_network(tweets: Iterable[Tweet],
                          opts: HashtagNetworkOptions | None = None) -> Graph:
    """Undirected network of hashtags co-occurring within a tweet.

    Each tweet contributes weight 1 to every unordered pair of its
    distinct (case-folded) hashtags, minus the excluded tags; a tweet
    with h distinct tags adds h*(h-1)/2 weight units. Edges below
    ``min_cooccurrence`` and then isolated nodes are dropped. The node
    label is the tag's most frequent surface form.
    """
    opts = opts or HashtagNetworkOptions()
    g = Graph(directed=False)
    surface_forms: dict[str, Counter[str]] = {}

    for tweet in tweets:
        tags: dict[str, str] = {}
        for raw in tweet.hashtags:
            folded = raw.casefold() if opts.case_fold else raw
            if folded not in opts.exclude_tags:
                tags.setdefault(folded, raw)
        for folded, raw in tags.items():
            surface_forms.setdefault(folded, Counter())[raw] += 1
        for a, b in combinations(sorted(tags), 2):
            g.add_edge(a, b, weight=1,
                       tweet_id=tweet.id if opts.track_evidence else None)

    if opts.min_cooccurrence > 1:
        pruned = Graph(directed=False)
        for (u, v), attrs in g.edges.items():
            if attrs.weight >= opts.min_cooccurrence:
                pruned.add_edge(u, v, weight=attrs.weight)
                pruned.edge(u, v).tweet_ids = list(attrs.tweet_ids)
        g = pruned
    else:
        g = g.subgraph(n for n in g.nodes if g.degree(n) > 0)

    for node in g.nodes:
        counts = surface_forms[node]
        # most frequent surface form; ties to the lexicographically smallest
        label = min(counts, key=lambda s: (-counts[s], s))
        g.add_node(node, label=label)
    for attrs in g.edges.values():
        attrs.tweet_ids.sort()
    return g
