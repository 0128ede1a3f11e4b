/** Canvas renderer: nodes at their exported positions, links, labels.
 *
 * Drawing goes through the narrow Draw2D interface so tests can pass a
 * recording stub where a real 2D context is unavailable. Label culling
 * keeps large graphs readable: past LABEL_LOD_NODES nodes only the
 * biggest on-screen nodes are labelled.
 */

import { Camera } from "./camera.js";
import { communityColor, FLASH_COLOR, UNIFORM_COLOR } from "./scales.js";
import type { ExplorerDocument, ViewState } from "./types.js";

export interface Draw2D {
  fillStyle: string | CanvasGradient | CanvasPattern;
  strokeStyle: string | CanvasGradient | CanvasPattern;
  globalAlpha: number;
  lineWidth: number;
  font: string;
  textAlign: CanvasTextAlign;
  clearRect(x: number, y: number, w: number, h: number): void;
  beginPath(): void;
  moveTo(x: number, y: number): void;
  lineTo(x: number, y: number): void;
  arc(x: number, y: number, r: number, a0: number, a1: number): void;
  fill(): void;
  stroke(): void;
  fillText(text: string, x: number, y: number): void;
}

export const LABEL_LOD_NODES = 5000;
const LABEL_BUDGET = 150;
const MIN_LABEL_RADIUS = 4;

export interface Highlight {
  nodeIndex: number;
  flashPhase: number; // 0..1, oscillated by the caller while flashing
}

export class Renderer {
  constructor(
    private readonly ctx: Draw2D,
    public readonly camera: Camera,
  ) {}

  /** Positions are taken from ``positions`` (resimulation) when given,
   * else from the document's exported coordinates. */
  render(
    doc: ExplorerDocument,
    view: ViewState,
    radii: number[],
    highlight: Highlight | null = null,
    positions: Float64Array | null = null,
  ): void {
    const { ctx, camera } = this;
    ctx.clearRect(0, 0, camera.width, camera.height);

    const px = new Float64Array(doc.nodes.length);
    const py = new Float64Array(doc.nodes.length);
    doc.nodes.forEach((node, i) => {
      const x = positions ? positions[2 * i] : node.x;
      const y = positions ? positions[2 * i + 1] : node.y;
      const [sx, sy] = camera.toScreen(x, y);
      px[i] = sx;
      py[i] = sy;
    });

    ctx.globalAlpha = 0.25;
    ctx.strokeStyle = "#9aa3ad";
    ctx.lineWidth = 1;
    for (const link of doc.links) {
      ctx.beginPath();
      ctx.moveTo(px[link.source], py[link.source]);
      ctx.lineTo(px[link.target], py[link.target]);
      ctx.stroke();
    }

    ctx.globalAlpha = 1;
    doc.nodes.forEach((node, i) => {
      const flashing = highlight !== null && highlight.nodeIndex === i;
      const selected = view.selectedNode === i;
      ctx.fillStyle = flashing && highlight.flashPhase < 0.5
        ? FLASH_COLOR
        : view.colorMode === "community"
          ? communityColor(node.community)
          : UNIFORM_COLOR;
      ctx.beginPath();
      ctx.arc(px[i], py[i], radii[i], 0, 2 * Math.PI);
      ctx.fill();
      if (selected || flashing) {
        ctx.strokeStyle = "#1b1f23";
        ctx.lineWidth = 2;
        ctx.stroke();
      }
    });

    this.drawLabels(doc, radii, px, py);
  }

  private drawLabels(
    doc: ExplorerDocument,
    radii: number[],
    px: Float64Array,
    py: Float64Array,
  ): void {
    const { ctx, camera } = this;
    const onScreen = (i: number) =>
      px[i] >= -20 && px[i] <= camera.width + 20 &&
      py[i] >= -20 && py[i] <= camera.height + 20;

    let candidates = doc.nodes.map((_, i) => i).filter(onScreen);
    if (doc.nodes.length > LABEL_LOD_NODES) {
      candidates = candidates
        .filter((i) => radii[i] >= MIN_LABEL_RADIUS)
        .sort((a, b) => radii[b] - radii[a])
        .slice(0, LABEL_BUDGET);
    }
    ctx.fillStyle = "#1b1f23";
    ctx.font = "11px system-ui, sans-serif";
    ctx.textAlign = "center";
    for (const i of candidates) {
      ctx.fillText(doc.nodes[i].label, px[i], py[i] - radii[i] - 3);
    }
  }

  /** Topmost node under a canvas pixel, or null. */
  pick(
    doc: ExplorerDocument,
    radii: number[],
    x: number,
    y: number,
    positions: Float64Array | null = null,
  ): number | null {
    for (let i = doc.nodes.length - 1; i >= 0; i--) {
      const node = doc.nodes[i];
      const wx = positions ? positions[2 * i] : node.x;
      const wy = positions ? positions[2 * i + 1] : node.y;
      const [sx, sy] = this.camera.toScreen(wx, wy);
      const r = radii[i] + 2;
      if ((sx - x) * (sx - x) + (sy - y) * (sy - y) <= r * r) return i;
    }
    return null;
  }
}
