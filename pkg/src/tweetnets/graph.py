"""Weighted graph container with attribute maps and display-side reductions.

Graphs are built once (by the network builders) and then only reduced:
every operation here returns a new graph and never mutates its input, so
concurrent reads are safe.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator

NodeId = int | str
Scalar = str | int | float | bool | None


def node_sort_key(node: NodeId) -> tuple[str, NodeId]:
    """Deterministic sort key that tolerates mixed int/str node ids."""
    return (node.__class__.__name__, node)


@dataclass
class EdgeAttrs:
    """Collapsed multi-edge: integer weight plus the tweet ids evidencing it."""

    weight: int = 0
    tweet_ids: list[int] = field(default_factory=list)

    def copy(self) -> "EdgeAttrs":
        return EdgeAttrs(self.weight, list(self.tweet_ids))


class Graph:
    """Directed or undirected simple graph with integer edge weights.

    Self-loops are dropped at insertion: they carry no relational
    information and break the layout repulsion math. Edge multiplicity is
    collapsed into ``EdgeAttrs.weight`` with an optional evidence list.
    For undirected graphs the edge key is the sorted endpoint pair.
    """

    def __init__(self, directed: bool = True):
        self.directed = directed
        self._nodes: dict[NodeId, dict[str, Scalar]] = {}
        self._edges: dict[tuple[NodeId, NodeId], EdgeAttrs] = {}
        self._succ: dict[NodeId, dict[NodeId, EdgeAttrs]] = {}
        self._pred: dict[NodeId, dict[NodeId, EdgeAttrs]] = {}

    # -- construction ------------------------------------------------------

    def add_node(self, node: NodeId, **attrs: Scalar) -> None:
        """Add a node; repeated calls merge attributes (latest wins)."""
        if node not in self._nodes:
            self._nodes[node] = {}
            self._succ[node] = {}
            self._pred[node] = {}
        if attrs:
            self._nodes[node].update(attrs)

    def add_edge(self, u: NodeId, v: NodeId, weight: int = 1,
                 tweet_id: int | None = None) -> None:
        """Add ``weight`` to the (u, v) edge, creating endpoints as needed.

        Self-loops (u == v) are silently dropped.
        """
        if u == v:
            return
        if weight < 1 or int(weight) != weight:
            raise ValueError(f"edge weight must be a positive integer, got {weight!r}")
        self.add_node(u)
        self.add_node(v)
        key = self.edge_key(u, v)
        attrs = self._edges.get(key)
        if attrs is None:
            attrs = EdgeAttrs()
            self._edges[key] = attrs
            self._succ[u][v] = attrs
            self._pred[v][u] = attrs
            if not self.directed:
                self._succ[v][u] = attrs
                self._pred[u][v] = attrs
        attrs.weight += int(weight)
        if tweet_id is not None:
            attrs.tweet_ids.append(tweet_id)

    def edge_key(self, u: NodeId, v: NodeId) -> tuple[NodeId, NodeId]:
        if self.directed:
            return (u, v)
        a, b = sorted((u, v), key=node_sort_key)
        return (a, b)

    # -- inspection --------------------------------------------------------

    @property
    def nodes(self) -> dict[NodeId, dict[str, Scalar]]:
        return self._nodes

    @property
    def edges(self) -> dict[tuple[NodeId, NodeId], EdgeAttrs]:
        return self._edges

    def has_node(self, node: NodeId) -> bool:
        return node in self._nodes

    def has_edge(self, u: NodeId, v: NodeId) -> bool:
        return self.edge_key(u, v) in self._edges

    def edge(self, u: NodeId, v: NodeId) -> EdgeAttrs:
        return self._edges[self.edge_key(u, v)]

    def successors(self, node: NodeId) -> Iterator[NodeId]:
        return iter(self._succ[node])

    def predecessors(self, node: NodeId) -> Iterator[NodeId]:
        return iter(self._pred[node])

    def neighbors(self, node: NodeId) -> Iterator[NodeId]:
        """Distinct neighbors ignoring direction."""
        seen = dict.fromkeys(self._succ[node])
        seen.update(dict.fromkeys(self._pred[node]))
        return iter(seen)

    def degree(self, node: NodeId, mode: str = "total", weighted: bool = False) -> int:
        """Degree of ``node``: distinct neighbors, or summed edge weights.

        ``mode`` is one of ``in``/``out``/``total``; for directed graphs
        ``total`` is in + out (a mutual pair counts twice). Undirected
        graphs ignore the mode. Unknown nodes raise ``KeyError``.
        """
        if node not in self._nodes:
            raise KeyError(node)
        if mode not in ("in", "out", "total"):
            raise ValueError(f"unknown degree mode {mode!r}")
        if not self.directed:
            adj = self._succ[node]
            return sum(a.weight for a in adj.values()) if weighted else len(adj)
        total = 0
        if mode in ("out", "total"):
            adj = self._succ[node]
            total += sum(a.weight for a in adj.values()) if weighted else len(adj)
        if mode in ("in", "total"):
            adj = self._pred[node]
            total += sum(a.weight for a in adj.values()) if weighted else len(adj)
        return total

    def number_of_nodes(self) -> int:
        return len(self._nodes)

    def number_of_edges(self) -> int:
        return len(self._edges)

    def total_weight(self) -> int:
        return sum(a.weight for a in self._edges.values())

    def sorted_nodes(self) -> list[NodeId]:
        return sorted(self._nodes, key=node_sort_key)

    # -- derivation --------------------------------------------------------

    def subgraph(self, keep: Iterable[NodeId]) -> "Graph":
        """Induced subgraph on ``keep`` (attribute maps are copied)."""
        keep_set = set(keep)
        out = Graph(directed=self.directed)
        for node in self._nodes:
            if node in keep_set:
                out.add_node(node, **self._nodes[node])
        for (u, v), attrs in self._edges.items():
            if u in keep_set and v in keep_set:
                out._edges[out.edge_key(u, v)] = copied = attrs.copy()
                out._succ[u][v] = copied
                out._pred[v][u] = copied
                if not self.directed:
                    out._succ[v][u] = copied
                    out._pred[u][v] = copied
        return out

    def copy(self) -> "Graph":
        return self.subgraph(self._nodes)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self.directed == other.directed
            and self._nodes == other._nodes
            and self._edges == other._edges
        )

    def __repr__(self) -> str:
        kind = "directed" if self.directed else "undirected"
        return (f"<Graph {kind} nodes={self.number_of_nodes()} "
                f"edges={self.number_of_edges()}>")


def weakly_connected_components(g: Graph) -> list[set[NodeId]]:
    """Partition of the nodes into weakly connected components.

    Direction is ignored. Components are returned largest first, ties
    broken by their smallest node id, so the order is deterministic.
    """
    seen: set[NodeId] = set()
    components: list[set[NodeId]] = []
    for start in g.sorted_nodes():
        if start in seen:
            continue
        comp = {start}
        stack = [start]
        while stack:
            node = stack.pop()
            for nbr in g.neighbors(node):
                if nbr not in comp:
                    comp.add(nbr)
                    stack.append(nbr)
        seen |= comp
        components.append(comp)
    components.sort(key=lambda c: (-len(c), min(node_sort_key(n) for n in c)))
    return components


def giant_component(g: Graph) -> Graph:
    """Induced subgraph on the largest weakly connected component.

    Ties go to the component containing the smallest node id. The empty
    graph maps to an empty graph.
    """
    components = weakly_connected_components(g)
    if not components:
        return Graph(directed=g.directed)
    return g.subgraph(components[0])


def filter_min_degree(g: Graph, k: int, mode: str = "total") -> Graph:
    """Induced subgraph on nodes whose degree in ``g`` is at least ``k``.

    One-pass filter: degrees are measured in the input graph, not
    re-checked after removal (this is not a k-core iteration, so the
    result may contain nodes whose residual degree is below ``k``).
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    keep = [n for n in g.nodes if g.degree(n, mode=mode) >= k]
    return g.subgraph(keep)
