#!/usr/bin/env python3
"""The whole batch pipeline through the CLI, corpus to explorer document.

build -> detect -> layout -> export, each stage a subcommand reading and
writing the explorer document, plus the Gephi-bound formats at the end.
The resulting JSON is what the browser explorer loads.
"""

import json
import tempfile
from pathlib import Path

from tweetnets.cli import main
from tweetnets.synthetic import synthetic_tweets, write_corpus

workdir = Path(tempfile.mkdtemp(prefix="tweetnets-pipeline-"))
corpus = workdir / "corpus.jsonl"
write_corpus(synthetic_tweets(1500, seed=99, n_users=50), corpus)

stages = [
    ["build", "--input", str(corpus), "--type", "retweet",
     "--query-label", "ballot", "--min-degree", "1",
     "--output", str(workdir / "built.json")],
    ["detect", "--input", str(workdir / "built.json"), "--seed", "42",
     "--output", str(workdir / "communities.json")],
    ["layout", "--input", str(workdir / "communities.json"), "--seed", "42",
     "--iterations", "150", "--output", str(workdir / "spatialized.json")],
    ["export", "--input", str(workdir / "spatialized.json"),
     "--format", "explorer", "--output", str(workdir / "explorer.json")],
    ["export", "--input", str(workdir / "spatialized.json"),
     "--format", "graphml", "--output", str(workdir / "network.graphml")],
    ["export", "--input", str(workdir / "spatialized.json"),
     "--format", "csv", "--output", str(workdir / "edges.csv")],
]
for argv in stages:
    print(f"$ tweetnets {' '.join(argv)}")
    assert main(argv) == 0

doc = json.loads((workdir / "explorer.json").read_text())
print(f"\nexplorer document: {len(doc['nodes'])} nodes, {len(doc['links'])} links")
print(f"metadata: {doc['metadata']}")
sample = max(doc["nodes"], key=lambda n: n["in_degree"])
print(f"most retweeted node: @{sample['label']} at ({sample['x']}, {sample['y']}), "
      f"community {sample['community']}, {sample['in_degree']} retweets")
print(f"\nall outputs in {workdir}")
print("serve them for the browser UI with:")
print(f"  tweetnets serve --dir {workdir} --port 8000")
