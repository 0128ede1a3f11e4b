#!/usr/bin/env python3
"""Force-directed layout with Barnes-Hut repulsion, and why theta matters.

Lays out a planted two-block graph, confirms the blocks land apart, and
measures the quadtree approximation against exact pairwise summation at
a few opening angles.
"""

import random
import time

import numpy as np

from tweetnets import Graph, LayoutParams, QuadTree, force_layout

rng = random.Random(0)
g = Graph(directed=False)
for i in range(60):
    g.add_node(i)
for i in range(60):
    for j in range(i + 1, 60):
        same = (i < 30) == (j < 30)
        if rng.random() < (0.3 if same else 0.01):
            g.add_edge(i, j)

result = force_layout(g, LayoutParams(iterations=200, seed=1))
print(f"layout converged in {result.iterations_run} iterations; "
      f"energy {result.energy_trace[0]:.1f} -> {result.energy_trace[-1]:.2e}")

pos = {n: np.array(p) for n, p in result.positions.items()}
intra, inter = [], []
for i in range(60):
    for j in range(i + 1, 60):
        d = np.linalg.norm(pos[i] - pos[j])
        (intra if (i < 30) == (j < 30) else inter).append(d)
print(f"mean intra-block distance {np.mean(intra):.2f} "
      f"< mean inter-block distance {np.mean(inter):.2f}")

print("\nBarnes-Hut vs exact pairwise repulsion, 2000 random points:")
pts = np.random.default_rng(3).random((2000, 2)) * 100
tree = QuadTree(pts)


def exact(q):
    delta = q - pts
    d2 = (delta * delta).sum(axis=1)
    keep = d2 > 1e-12
    return (delta[keep] / d2[keep, None]).sum(axis=0)


queries = pts[:150]
reference = np.array([exact(q) for q in queries])
scale = np.linalg.norm(reference, axis=1).mean()
for theta in (0.0, 0.5, 0.7, 1.0):
    t0 = time.perf_counter()
    approx = np.array([tree.force_at(q, theta) for q in queries])
    took = time.perf_counter() - t0
    worst = np.linalg.norm(approx - reference, axis=1).max() / scale
    print(f"  theta={theta:<4} worst error {worst:8.2e} of mean force   "
          f"{took * 1000 / len(queries):5.2f} ms/query")
