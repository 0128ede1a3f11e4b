"""Force-directed 2-D layout with Barnes-Hut repulsion.

All nodes repel with a 1/d law (degree-proportional masses so hubs do
not collapse into their neighborhoods) and edges attract with
weight-proportional springs, optionally LinLog. The step size adapts:
an iteration that would raise the system energy is rejected and halves
the step, otherwise the step grows 10%. The energy trace is therefore
non-increasing, and runs are deterministic given (graph, params).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph import Graph, NodeId
from .quadtree import QuadTree

_DIST_EPS = 1e-12


@dataclass(frozen=True)
class LayoutParams:
    iterations: int = 300
    repulsion_strength: float = 10.0
    attraction_model: str = "spring"  # spring | linlog
    theta: float = 0.7
    initial_step: float = 0.05
    seed: int = 42
    convergence_tol: float = 1e-4

    def __post_init__(self) -> None:
        if self.iterations < 1:
            raise ValueError("iterations must be >= 1")
        if self.repulsion_strength <= 0:
            raise ValueError("repulsion_strength must be positive")
        if self.attraction_model not in ("spring", "linlog"):
            raise ValueError(f"unknown attraction model {self.attraction_model!r}")
        if not 0.0 <= self.theta <= 1.0:
            raise ValueError("theta must lie in [0, 1]")
        if self.initial_step <= 0:
            raise ValueError("initial_step must be positive")


@dataclass(frozen=True)
class LayoutResult:
    positions: dict[NodeId, tuple[float, float]]
    energy_trace: tuple[float, ...]
    iterations_run: int


def _edge_arrays(g: Graph, index: dict[NodeId, int]) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Unique undirected edge index pairs with symmetrized weights."""
    weights: dict[tuple[int, int], float] = {}
    for (u, v), attrs in g.edges.items():
        i, j = index[u], index[v]
        key = (i, j) if i < j else (j, i)
        weights[key] = weights.get(key, 0.0) + attrs.weight
    if not weights:
        return np.empty(0, dtype=int), np.empty(0, dtype=int), np.empty(0)
    keys = sorted(weights)
    src = np.array([k[0] for k in keys], dtype=int)
    dst = np.array([k[1] for k in keys], dtype=int)
    w = np.array([weights[k] for k in keys])
    return src, dst, w


def _initial_positions(n: int, seed: int) -> np.ndarray:
    """Seed-determined placement on a disc, centered on the origin."""
    rng = np.random.default_rng(seed)
    radius = max(1.0, np.sqrt(n)) * np.sqrt(rng.random(n))
    angle = rng.random(n) * 2.0 * np.pi
    pos = np.column_stack([radius * np.cos(angle), radius * np.sin(angle)])
    return pos - pos.mean(axis=0)


def force_layout(g: Graph, params: LayoutParams | None = None,
                 initial_positions: dict[NodeId, tuple[float, float]] | None = None) -> LayoutResult:
    """Spatialize a graph so that heavily linked nodes sit close together.

    Stops after ``iterations`` or once the mean accepted displacement
    falls below ``convergence_tol``. A single node lands at the origin.
    """
    params = params or LayoutParams()
    nodes = g.sorted_nodes()
    if not nodes:
        raise ValueError("cannot lay out an empty graph")
    index = {node: i for i, node in enumerate(nodes)}
    n = len(nodes)

    masses = np.array([1.0 + g.degree(node, "total", weighted=True) for node in nodes])
    src, dst, edge_w = _edge_arrays(g, index)

    if initial_positions is None:
        pos = _initial_positions(n, params.seed)
    else:
        missing = [node for node in nodes if node not in initial_positions]
        if missing:
            raise ValueError(f"initial_positions missing node {missing[0]!r}")
        pos = np.array([initial_positions[node] for node in nodes], dtype=float)

    k_rep = params.repulsion_strength
    linlog = params.attraction_model == "linlog"

    def forces(p: np.ndarray) -> np.ndarray:
        out = np.zeros_like(p)
        tree = QuadTree(p, masses)
        for i in range(n):
            out[i] = k_rep * masses[i] * tree.force_at(p[i], params.theta)
        if len(src):
            delta = p[dst] - p[src]
            dist = np.sqrt((delta * delta).sum(axis=1))
            ok = dist > _DIST_EPS
            if linlog:
                pull = np.zeros_like(delta)
                pull[ok] = (delta[ok] / dist[ok, None]) * (edge_w[ok] * np.log1p(dist[ok]))[:, None]
            else:
                pull = delta * edge_w[:, None]
                pull[~ok] = 0.0
            np.add.at(out, src, pull)
            np.add.at(out, dst, -pull)
        return out

    def energy(f: np.ndarray) -> float:
        return float((f * f).sum())

    step = params.initial_step
    force = forces(pos)
    e = energy(force)
    trace: list[float] = []

    for _ in range(params.iterations):
        tentative = pos + step * force
        tentative_force = forces(tentative)
        tentative_e = energy(tentative_force)
        if tentative_e > e:
            step *= 0.5
            trace.append(e)
            continue
        mean_disp = step * float(np.sqrt((force * force).sum(axis=1)).mean())
        pos, force, e = tentative, tentative_force, tentative_e
        step *= 1.1
        trace.append(e)
        if mean_disp < params.convergence_tol:
            break

    positions = {node: (float(pos[i, 0]), float(pos[i, 1])) for node, i in index.items()}
    return LayoutResult(positions=positions, energy_trace=tuple(trace),
                        iterations_run=len(trace))
