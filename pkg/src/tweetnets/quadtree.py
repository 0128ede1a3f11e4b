"""Barnes-Hut quadtree: approximate pairwise 1/d repulsion in O(n log n).

A cell is summarized by its center of mass when cell_width / distance
falls below the opening angle theta; theta = 0 therefore degenerates to
exact pairwise summation.
"""

from __future__ import annotations

import numpy as np

_EPS = 1e-12  # squared-distance floor below which a term is treated as self
_MAX_DEPTH = 48


class _Cell:
    __slots__ = ("cx", "cy", "half", "mass", "com_x", "com_y", "children", "points")

    def __init__(self, cx: float, cy: float, half: float):
        self.cx = cx
        self.cy = cy
        self.half = half
        self.mass = 0.0
        self.com_x = 0.0
        self.com_y = 0.0
        self.children: list[_Cell] | None = None
        self.points: list[int] = []


class QuadTree:
    """Quadtree over weighted 2-D points, queried for net 1/d repulsion.

    The returned force at a query point q is
    sum_j m_j * (q - p_j) / |q - p_j|^2, with zero-distance terms (the
    query point itself) skipped.
    """

    def __init__(self, points: np.ndarray, masses: np.ndarray | None = None):
        pts = np.asarray(points, dtype=float)
        if pts.ndim != 2 or pts.shape[1] != 2:
            raise ValueError("points must be an (n, 2) array")
        if not np.all(np.isfinite(pts)):
            raise ValueError("points must be finite")
        n = len(pts)
        if masses is None:
            masses = np.ones(n)
        self._px = pts[:, 0].tolist()
        self._py = pts[:, 1].tolist()
        self._pm = np.asarray(masses, dtype=float).tolist()

        if n == 0:
            self._root = None
            return
        lo = pts.min(axis=0)
        hi = pts.max(axis=0)
        center = (lo + hi) / 2.0
        half = float(max(hi[0] - lo[0], hi[1] - lo[1]) / 2.0) * 1.0001 + 1e-9
        self._root = _Cell(float(center[0]), float(center[1]), half)
        for i in range(n):
            self._insert(i)
        self._summarize(self._root)

    def _insert(self, i: int) -> None:
        cell = self._root
        depth = 0
        x, y = self._px[i], self._py[i]
        while True:
            if cell.children is None:
                if not cell.points:
                    cell.points.append(i)
                    return
                if depth >= _MAX_DEPTH:
                    # coincident or pathologically close points share a leaf
                    cell.points.append(i)
                    return
                self._split(cell)
            cell = cell.children[self._quadrant(cell, x, y)]
            depth += 1

    @staticmethod
    def _quadrant(cell: _Cell, x: float, y: float) -> int:
        return (1 if x > cell.cx else 0) | (2 if y > cell.cy else 0)

    def _split(self, cell: _Cell) -> None:
        h = cell.half / 2.0
        cell.children = [
            _Cell(cell.cx - h, cell.cy - h, h),
            _Cell(cell.cx + h, cell.cy - h, h),
            _Cell(cell.cx - h, cell.cy + h, h),
            _Cell(cell.cx + h, cell.cy + h, h),
        ]
        for i in cell.points:
            child = cell.children[self._quadrant(cell, self._px[i], self._py[i])]
            child.points.append(i)
        cell.points = []

    def _summarize(self, cell: _Cell) -> tuple[float, float, float]:
        mass = 0.0
        mx = 0.0
        my = 0.0
        if cell.children is None:
            for i in cell.points:
                m = self._pm[i]
                mass += m
                mx += m * self._px[i]
                my += m * self._py[i]
        else:
            for child in cell.children:
                cm, cx, cy = self._summarize(child)
                mass += cm
                mx += cx
                my += cy
        cell.mass = mass
        if mass > 0.0:
            cell.com_x = mx / mass
            cell.com_y = my / mass
        return mass, mx, my

    def force_at(self, query, theta: float) -> np.ndarray:
        """Net repulsion force vector at ``query`` with opening angle theta."""
        if not 0.0 <= theta <= 1.0:
            raise ValueError("theta must lie in [0, 1]")
        qx, qy = float(query[0]), float(query[1])
        fx = 0.0
        fy = 0.0
        if self._root is None or self._root.mass == 0.0:
            return np.array([0.0, 0.0])
        theta_sq = theta * theta
        stack = [self._root]
        while stack:
            cell = stack.pop()
            if cell.mass == 0.0:
                continue
            dx = qx - cell.com_x
            dy = qy - cell.com_y
            d_sq = dx * dx + dy * dy
            if cell.children is not None:
                width = 2.0 * cell.half
                if width * width < theta_sq * d_sq:
                    f = cell.mass / d_sq
                    fx += f * dx
                    fy += f * dy
                else:
                    stack.extend(cell.children)
            else:
                for i in cell.points:
                    px = qx - self._px[i]
                    py = qy - self._py[i]
                    p_sq = px * px + py * py
                    if p_sq < _EPS:
                        continue
                    f = self._pm[i] / p_sq
                    fx += f * px
                    fy += f * py
        return np.array([fx, fy])


def quadtree_force(points, query, theta: float, masses=None) -> np.ndarray:
    """One-shot Barnes-Hut force query (builds the tree and discards it)."""
    return QuadTree(points, masses).force_at(query, theta)
