/** Optional client-side re-simulation of the layout.
 *
 * The exported positions are authoritative; this small spring-electric
 * stepper exists so the user can nudge the layout live without any
 * server round trip. It never touches the document.
 */

import type { ExplorerDocument } from "./types.js";

export class Simulation {
  readonly positions: Float64Array;
  private step = 0.02;
  private energy = Number.POSITIVE_INFINITY;

  constructor(private readonly doc: ExplorerDocument, private readonly repulsion = 10) {
    this.positions = new Float64Array(doc.nodes.length * 2);
    doc.nodes.forEach((node, i) => {
      this.positions[2 * i] = node.x;
      this.positions[2 * i + 1] = node.y;
    });
  }

  /** One adaptive iteration; returns the system energy after it. */
  tick(): number {
    const n = this.doc.nodes.length;
    if (n < 2) return 0;
    const p = this.positions;
    const f = new Float64Array(2 * n);

    for (let i = 0; i < n; i++) {
      for (let j = i + 1; j < n; j++) {
        const dx = p[2 * i] - p[2 * j];
        const dy = p[2 * i + 1] - p[2 * j + 1];
        const dSq = dx * dx + dy * dy;
        if (dSq < 1e-12) continue;
        const k = this.repulsion / dSq;
        f[2 * i] += k * dx;
        f[2 * i + 1] += k * dy;
        f[2 * j] -= k * dx;
        f[2 * j + 1] -= k * dy;
      }
    }
    for (const link of this.doc.links) {
      const s = link.source;
      const t = link.target;
      const dx = p[2 * t] - p[2 * s];
      const dy = p[2 * t + 1] - p[2 * s + 1];
      f[2 * s] += dx * link.weight;
      f[2 * s + 1] += dy * link.weight;
      f[2 * t] -= dx * link.weight;
      f[2 * t + 1] -= dy * link.weight;
    }

    let energy = 0;
    for (let i = 0; i < 2 * n; i++) energy += f[i] * f[i];
    if (energy > this.energy) {
      this.step *= 0.5;
    } else {
      this.step *= 1.05;
    }
    this.energy = energy;
    for (let i = 0; i < 2 * n; i++) p[i] += this.step * f[i];
    return energy;
  }
}
