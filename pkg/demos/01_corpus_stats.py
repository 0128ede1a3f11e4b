#!/usr/bin/env python3
"""Parse a JSONL corpus and look at it: timeline and search-vs-stream overlap.

Generates a synthetic 48-hour corpus, bins tweet counts per hour, then
simulates the classic question "how much of the streamed corpus did the
search endpoint give us?" with a second, thinned id set.
"""

import random
import tempfile
from pathlib import Path

from tweetnets import load_corpus, overlap, timeline
from tweetnets.synthetic import synthetic_tweets, write_corpus

workdir = Path(tempfile.mkdtemp(prefix="tweetnets-demo-"))
corpus_path = workdir / "clubhouse.jsonl"
write_corpus(synthetic_tweets(2000, seed=5), corpus_path)
print(f"wrote synthetic corpus: {corpus_path}")

tweets, skipped = load_corpus(corpus_path)
print(f"parsed {len(tweets)} tweets ({skipped} lines skipped)")
retweets = sum(t.is_retweet for t in tweets)
print(f"{retweets} of them are retweets ({retweets / len(tweets):.0%})")

series = timeline(tweets, bin_width=3600)
print(f"\nhourly timeline over {len(series.bins)} bins "
      f"(total check: {series.total()} == {len(tweets)})")
peak = max(series.bins, key=lambda b: b[1])
scale = 48 / peak[1]
for start, count in series.bins[:12]:
    print(f"  t+{(start - series.bins[0][0]) // 3600:3d}h {'#' * int(count * scale):<48} {count}")
print("  ...")

# pretend the search endpoint missed a fifth of the stream
rng = random.Random(1)
stream_ids = {t.id for t in tweets}
search_ids = set(rng.sample(sorted(stream_ids), int(len(stream_ids) * 0.8)))
report = overlap(stream_ids, search_ids, tweets)
print(f"\nsearch vs stream: containment {report.containment:.2f} "
      f"({report.shared}/{report.reference_size} ids)")
print(f"of the missing tweets, {report.missing_original_fraction:.0%} were originals "
      f"and {report.missing_retweet_fraction:.0%} retweets")
