/** Pan/zoom transform between document space and canvas pixels. */

import type { ExplorerDocument } from "./types.js";

export class Camera {
  centerX = 0;
  centerY = 0;
  scale = 1;

  constructor(public width: number, public height: number) {}

  /** Frame the whole document with a small margin. */
  fit(doc: ExplorerDocument): void {
    if (doc.nodes.length === 0) {
      this.centerX = 0;
      this.centerY = 0;
      this.scale = 1;
      return;
    }
    const xs = doc.nodes.map((n) => n.x);
    const ys = doc.nodes.map((n) => n.y);
    const minX = Math.min(...xs);
    const maxX = Math.max(...xs);
    const minY = Math.min(...ys);
    const maxY = Math.max(...ys);
    this.centerX = (minX + maxX) / 2;
    this.centerY = (minY + maxY) / 2;
    const spanX = Math.max(maxX - minX, 1e-9);
    const spanY = Math.max(maxY - minY, 1e-9);
    this.scale = 0.9 * Math.min(this.width / spanX, this.height / spanY);
  }

  zoomTo(x: number, y: number, scale: number): void {
    this.centerX = x;
    this.centerY = y;
    this.scale = scale;
  }

  toScreen(x: number, y: number): [number, number] {
    return [
      this.width / 2 + (x - this.centerX) * this.scale,
      this.height / 2 + (y - this.centerY) * this.scale,
    ];
  }

  toWorld(px: number, py: number): [number, number] {
    return [
      this.centerX + (px - this.width / 2) / this.scale,
      this.centerY + (py - this.height / 2) / this.scale,
    ];
  }

  zoomBy(factor: number, pivotPx: number, pivotPy: number): void {
    const [wx, wy] = this.toWorld(pivotPx, pivotPy);
    this.scale *= factor;
    const [nx, ny] = this.toWorld(pivotPx, pivotPy);
    this.centerX += wx - nx;
    this.centerY += wy - ny;
  }

  panBy(dxPx: number, dyPx: number): void {
    this.centerX -= dxPx / this.scale;
    this.centerY -= dyPx / this.scale;
  }
}
