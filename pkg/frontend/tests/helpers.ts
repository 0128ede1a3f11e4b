import { readFileSync } from "node:fs";
import { fileURLToPath } from "node:url";
import { dirname, join } from "node:path";

import { parseDocument } from "../src/document";
import type { Draw2D } from "../src/renderer";
import type { ExplorerDocument } from "../src/types";

// the golden export produced by the pipeline's acceptance harness is the
// contract artifact this UI consumes
const GOLDEN_PATH = join(
  dirname(fileURLToPath(import.meta.url)),
  "..", "..", "tests", "data", "golden_export.json",
);

export function goldenDocument(): ExplorerDocument {
  return parseDocument(JSON.parse(readFileSync(GOLDEN_PATH, "utf-8")));
}

/** Draw2D stub that counts primitives instead of rasterizing them. */
export class RecordingContext implements Draw2D {
  fillStyle: string | CanvasGradient | CanvasPattern = "";
  strokeStyle: string | CanvasGradient | CanvasPattern = "";
  globalAlpha = 1;
  lineWidth = 1;
  font = "";
  textAlign: CanvasTextAlign = "left";

  clears = 0;
  arcs: Array<{ x: number; y: number; r: number; fill: string }> = [];
  lines = 0;
  labels: string[] = [];
  private pendingArc: { x: number; y: number; r: number } | null = null;

  clearRect(): void {
    this.clears += 1;
    this.arcs = [];
    this.lines = 0;
    this.labels = [];
  }
  beginPath(): void {}
  moveTo(): void {}
  lineTo(): void {
    this.lines += 1;
  }
  arc(x: number, y: number, r: number): void {
    this.pendingArc = { x, y, r };
  }
  fill(): void {
    if (this.pendingArc) {
      this.arcs.push({ ...this.pendingArc, fill: String(this.fillStyle) });
      this.pendingArc = null;
    }
  }
  stroke(): void {}
  fillText(text: string): void {
    this.labels.push(text);
  }
}
