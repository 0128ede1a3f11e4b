#!/usr/bin/env python3
"""Community detection: modularity by hand, then Louvain at two resolutions.

Starts with the textbook fixture (two triangles: Q = 0.5), then runs the
optimizer on a planted two-block graph and on a retweet network, showing
how the resolution parameter trades community size for count.
"""

import random

from tweetnets import Graph, LouvainParams, build_retweet_network, louvain, modularity
from tweetnets.synthetic import synthetic_tweets

triangles = Graph(directed=False)
for a, b in [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]:
    triangles.add_edge(a, b)
print("two disjoint triangles:")
print(f"  all-in-one partition      Q = {modularity(triangles, {n: 0 for n in triangles.nodes}):.3f}")
print(f"  triangle partition        Q = {modularity(triangles, {n: n // 3 for n in triangles.nodes}):.3f}")
part = louvain(triangles)
print(f"  louvain finds             {part.community_count} communities, Q = {part.modularity:.3f}")

rng = random.Random(0)
planted = Graph(directed=False)
for i in range(60):
    planted.add_node(i)
for i in range(60):
    for j in range(i + 1, 60):
        same = (i < 30) == (j < 30)
        if rng.random() < (0.3 if same else 0.01):
            planted.add_edge(i, j)
part = louvain(planted)
left = {n for n, c in part.assignment.items() if c == part.assignment[0]}
print(f"\nplanted 2-block graph: louvain -> {part.community_count} communities, "
      f"Q = {part.modularity:.3f}")
print(f"block recovery: {len(left & set(range(30)))}/30 of the first block together")

tweets = synthetic_tweets(3000, seed=12, n_users=60)
rt = build_retweet_network(tweets)
for resolution in (0.5, 1.0, 2.0):
    part = louvain(rt, LouvainParams(resolution=resolution, seed=42))
    print(f"retweet network at resolution {resolution}: "
          f"{part.community_count} communities, Q = {part.modularity:.3f}")
