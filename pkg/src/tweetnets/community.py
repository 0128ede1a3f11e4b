"""Louvain modularity optimization and modularity scoring.

Works on the symmetrized weighted graph: directed edges are folded into
undirected ones with summed weights before scoring, which is how the
standard two-phase algorithm is defined. Greedy local moving is easily
trapped by shallow local optima on small graphs, so the optimizer runs
the standard two-phase process several times (the first pass from the
classic all-singletons start, later passes from seeded random initial
partitions) and returns the best-scoring flat assignment. Everything is
seed-deterministic.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .graph import Graph, NodeId


class UndefinedModularityError(ValueError):
    """Modularity is undefined on graphs with zero total edge weight."""


@dataclass(frozen=True)
class Partition:
    """Node -> community assignment with dense ids from 0 and its score."""

    assignment: dict[NodeId, int]
    community_count: int
    modularity: float


@dataclass(frozen=True)
class LouvainParams:
    resolution: float = 1.0
    seed: int = 42
    min_gain: float = 1e-7
    max_passes: int = 50
    restarts: int = 32

    def __post_init__(self) -> None:
        if self.resolution <= 0:
            raise ValueError("resolution must be positive")
        if self.min_gain <= 0:
            raise ValueError("min_gain must be positive")
        if self.max_passes < 1:
            raise ValueError("max_passes must be >= 1")
        if self.restarts < 1:
            raise ValueError("restarts must be >= 1")


def _symmetrized(g: Graph) -> tuple[list[NodeId], list[dict[int, float]]]:
    """Canonical node list and symmetric adjacency (weights summed)."""
    nodes = g.sorted_nodes()
    index = {n: i for i, n in enumerate(nodes)}
    adj: list[dict[int, float]] = [{} for _ in nodes]
    for (u, v), attrs in g.edges.items():
        i, j = index[u], index[v]
        w = float(attrs.weight)
        adj[i][j] = adj[i].get(j, 0.0) + w
        adj[j][i] = adj[j].get(i, 0.0) + w
    return nodes, adj


def modularity(g: Graph, assignment: dict[NodeId, int], resolution: float = 1.0) -> float:
    """Newman modularity Q of a node->community assignment.

    Q = (1/2m) sum_ij [A_ij - resolution * k_i k_j / 2m] delta(c_i, c_j)
    over the symmetrized adjacency. Q lies in [-1, 1]. Raises
    UndefinedModularityError when the graph has no edge weight.
    """
    nodes, adj = _symmetrized(g)
    m = sum(sum(nbrs.values()) for nbrs in adj) / 2.0
    if m == 0:
        raise UndefinedModularityError("graph has no edges")

    degrees = [sum(nbrs.values()) for nbrs in adj]
    internal: dict[int, float] = {}
    total: dict[int, float] = {}
    for i, node in enumerate(nodes):
        c = assignment[node]
        total[c] = total.get(c, 0.0) + degrees[i]
        for j, w in adj[i].items():
            if j > i and assignment[nodes[j]] == c:
                internal[c] = internal.get(c, 0.0) + w

    two_m = 2.0 * m
    q = 0.0
    for c, tot in total.items():
        q += internal.get(c, 0.0) / m - resolution * (tot / two_m) ** 2
    return q


def _one_run(adj: list[dict[int, float]], m: float, rng: random.Random,
             gamma: float, min_gain: float, max_passes: int,
             random_init: bool) -> list[int]:
    """One standard two-phase optimization; returns node -> community ids."""
    two_m_sq = 2.0 * m * m
    level_adj = adj
    level_loop = [0.0] * len(adj)
    level_deg = [sum(nbrs.values()) for nbrs in level_adj]
    membership = list(range(len(adj)))
    use_random_init = random_init

    for _ in range(max_passes):
        n = len(level_adj)
        if use_random_init and n > 1:
            width = rng.randint(1, n)
            comm = [rng.randrange(width) for _ in range(n)]
        else:
            comm = list(range(n))
        use_random_init = False
        next_free = n
        tot: dict[int, float] = {}
        for i in range(n):
            tot[comm[i]] = tot.get(comm[i], 0.0) + level_deg[i]

        moved_any = False
        while True:
            moved_this_sweep = False
            order = list(range(n))
            rng.shuffle(order)
            for i in order:
                c_old = comm[i]
                links: dict[int, float] = {}
                for j, w in level_adj[i].items():
                    c = comm[j]
                    links[c] = links.get(c, 0.0) + w
                tot[c_old] -= level_deg[i]

                def insert_gain(c: int) -> float:
                    return (links.get(c, 0.0) / m
                            - gamma * tot.get(c, 0.0) * level_deg[i] / two_m_sq)

                stay = insert_gain(c_old)
                best_c, best_gain = c_old, stay
                for c in sorted(links):
                    if c == c_old:
                        continue
                    gain = insert_gain(c)
                    if gain > best_gain:
                        best_c, best_gain = c, gain
                # leaving for a fresh singleton community has gain 0
                if 0.0 > best_gain and tot.get(c_old, 0.0) > 0.0:
                    best_c, best_gain = next_free, 0.0
                if best_c != c_old and best_gain - stay >= min_gain:
                    if best_c == next_free:
                        next_free += 1
                    comm[i] = best_c
                    moved_this_sweep = True
                    moved_any = True
                tot[comm[i]] = tot.get(comm[i], 0.0) + level_deg[i]
            if not moved_this_sweep:
                break

        # dense renumber by first appearance in super-node index order
        dense: dict[int, int] = {}
        for i in range(n):
            dense.setdefault(comm[i], len(dense))
        comm = [dense[c] for c in comm]
        membership = [comm[s] for s in membership]
        n_new = len(dense)
        if not moved_any or n_new == n:
            break

        new_adj: list[dict[int, float]] = [{} for _ in range(n_new)]
        new_loop = [0.0] * n_new
        for i in range(n):
            new_loop[comm[i]] += level_loop[i]
            for j, w in level_adj[i].items():
                if j <= i:
                    continue
                ci, cj = comm[i], comm[j]
                if ci == cj:
                    new_loop[ci] += w
                else:
                    new_adj[ci][cj] = new_adj[ci].get(cj, 0.0) + w
                    new_adj[cj][ci] = new_adj[cj].get(ci, 0.0) + w
        level_adj = new_adj
        level_loop = new_loop
        level_deg = [sum(nbrs.values()) + 2.0 * new_loop[c]
                     for c, nbrs in enumerate(new_adj)]
    return membership


def _score(adj: list[dict[int, float]], m: float, membership: list[int],
           gamma: float) -> float:
    internal: dict[int, float] = {}
    total: dict[int, float] = {}
    for i, nbrs in enumerate(adj):
        c = membership[i]
        total[c] = total.get(c, 0.0) + sum(nbrs.values())
        for j, w in nbrs.items():
            if j > i and membership[j] == c:
                internal[c] = internal.get(c, 0.0) + w
    two_m = 2.0 * m
    return sum(internal.get(c, 0.0) / m - gamma * (tot / two_m) ** 2
               for c, tot in total.items())


def louvain(g: Graph, params: LouvainParams | None = None) -> Partition:
    """Two-phase Louvain: greedy local moves, then community aggregation.

    Phase one repeatedly moves single nodes to the neighboring (or a
    fresh singleton) community with the largest modularity gain until no
    move gains at least ``min_gain``; ties go to the lowest community
    id. Phase two collapses communities into super-nodes (internal
    weight becomes a self-loop) and phase one reruns on the reduced
    graph. The whole process runs ``restarts`` times from the seeded
    stream and the best assignment wins, so results are reproducible
    bit for bit given (graph, params).
    """
    params = params or LouvainParams()
    nodes, adj = _symmetrized(g)
    m = sum(sum(nbrs.values()) for nbrs in adj) / 2.0
    if m == 0:
        raise UndefinedModularityError("graph has no edges")

    rng = random.Random(params.seed)
    best: list[int] | None = None
    best_q = float("-inf")
    for r in range(params.restarts):
        membership = _one_run(adj, m, rng, params.resolution, params.min_gain,
                              params.max_passes, random_init=r > 0)
        q = _score(adj, m, membership, params.resolution)
        if q > best_q:
            best, best_q = membership, q

    dense: dict[int, int] = {}
    assignment: dict[NodeId, int] = {}
    for i, node in enumerate(nodes):
        assignment[node] = dense.setdefault(best[i], len(dense))
    return Partition(
        assignment=assignment,
        community_count=len(dense),
        modularity=modularity(g, assignment, resolution=params.resolution),
    )
