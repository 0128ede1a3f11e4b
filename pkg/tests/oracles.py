"""Independent brute-force oracles the implementation is checked against.

Everything here is written from the definitions (transitive closure,
O(n^2) double sums, exhaustive partition enumeration, nested-loop
tallies, exact pairwise summation) and never calls the code under test.
"""

from __future__ import annotations

from itertools import combinations

import numpy as np


# -- graphs ------------------------------------------------------------------

def components_by_closure(nodes, edges):
    """Connected components via boolean transitive closure."""
    order = list(nodes)
    idx = {n: i for i, n in enumerate(order)}
    n = len(order)
    reach = np.eye(n, dtype=bool)
    for u, v in edges:
        reach[idx[u], idx[v]] = True
        reach[idx[v], idx[u]] = True
    for _ in range(n):
        new = reach | (reach @ reach)
        if (new == reach).all():
            break
        reach = new
    seen = set()
    components = []
    for i in range(n):
        if i in seen:
            continue
        members = {j for j in range(n) if reach[i, j]}
        seen |= members
        components.append({order[j] for j in members})
    return components


def brute_degrees(nodes, edges, weights, directed):
    """Per-node (in, out, total) unweighted and weighted degrees by edge scan."""
    out = {n: {"in": 0, "out": 0, "w_in": 0, "w_out": 0} for n in nodes}
    for (u, v), w in zip(edges, weights):
        out[u]["out"] += 1
        out[u]["w_out"] += w
        out[v]["in"] += 1
        out[v]["w_in"] += w
        if not directed:
            out[v]["out"] += 1
            out[v]["w_out"] += w
            out[u]["in"] += 1
            out[u]["w_in"] += w
    return out


# -- modularity ---------------------------------------------------------------

def adjacency_matrix(g):
    """Symmetrized dense adjacency in sorted-node order."""
    from tweetnets.graph import node_sort_key

    order = sorted(g.nodes, key=node_sort_key)
    idx = {n: i for i, n in enumerate(order)}
    a = np.zeros((len(order), len(order)))
    for (u, v), attrs in g.edges.items():
        a[idx[u], idx[v]] += attrs.weight
        a[idx[v], idx[u]] += attrs.weight
    return order, a


def brute_modularity(a: np.ndarray, assignment: np.ndarray, resolution: float = 1.0) -> float:
    """Q straight from the definition: (1/2m) sum_ij [A_ij - g k_i k_j / 2m] d_ij."""
    k = a.sum(axis=1)
    two_m = a.sum()
    delta = assignment[:, None] == assignment[None, :]
    b = a - resolution * np.outer(k, k) / two_m
    return float((b * delta).sum() / two_m)


def set_partitions(n: int):
    """All set partitions of range(n) as restricted-growth assignment tuples."""
    a = [0] * n

    def rec(i: int, width: int):
        if i == n:
            yield tuple(a)
            return
        for c in range(width + 1):
            a[i] = c
            yield from rec(i + 1, max(width, c + 1))

    yield from rec(0, 0)


def best_partition_exhaustive(a: np.ndarray, resolution: float = 1.0):
    """(max Q, argmax assignment) over every partition of the node set."""
    n = len(a)
    parts = np.array(list(set_partitions(n)))
    k = a.sum(axis=1)
    two_m = a.sum()
    b = a - resolution * np.outer(k, k) / two_m
    delta = parts[:, :, None] == parts[:, None, :]
    scores = (b[None, :, :] * delta).sum(axis=(1, 2)) / two_m
    best = int(scores.argmax())
    return float(scores[best]), tuple(parts[best])


# -- tweet tallies -------------------------------------------------------------

def retweet_pair_tally(tweets):
    """(retweeter_id, author_id) -> count over non-self retweets."""
    counts = {}
    for t in tweets:
        if t.retweet_of is None or t.author.id == t.retweet_of.author.id:
            continue
        key = (t.author.id, t.retweet_of.author.id)
        counts[key] = counts.get(key, 0) + 1
    return counts


def hashtag_pair_tally(tweets, case_fold=True, exclude=frozenset()):
    """Unordered tag pair -> count by per-tweet nested-loop enumeration."""
    excluded = {t.casefold() for t in exclude} if case_fold else set(exclude)
    counts = {}
    for t in tweets:
        tags = sorted({tag.casefold() if case_fold else tag for tag in t.hashtags}
                      - excluded)
        for a, b in combinations(tags, 2):
            counts[(a, b)] = counts.get((a, b), 0) + 1
    return counts


def timeline_tally(stamps, width):
    counts = {}
    for s in stamps:
        b = (s // width) * width
        counts[b] = counts.get(b, 0) + 1
    return counts


# -- forces ---------------------------------------------------------------------

def exact_repulsion(points: np.ndarray, masses: np.ndarray, query: np.ndarray) -> np.ndarray:
    """Exact pairwise 1/d force sum, skipping zero-distance terms."""
    delta = query[None, :] - points
    d_sq = (delta * delta).sum(axis=1)
    keep = d_sq > 1e-12
    return (masses[keep, None] * delta[keep] / d_sq[keep, None]).sum(axis=0)
