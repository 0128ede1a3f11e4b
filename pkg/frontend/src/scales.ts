/** Monotone scales mapping node attributes to display radii and colors. */

import type { DocumentNode, ExplorerDocument, SizeMode } from "./types.js";

export const MIN_RADIUS = 2.5;
export const MAX_RADIUS = 14;

export function sizeValue(node: DocumentNode, mode: SizeMode): number {
  switch (mode) {
    case "in_degree":
      return node.in_degree;
    case "out_degree":
      return node.out_degree;
    case "followers":
      return node.followers ?? 0;
    case "friends":
      return node.friends ?? 0;
    case "uniform":
      return 1;
  }
}

/**
 * Radii for every node under the chosen mode: a square-root scale into
 * [MIN_RADIUS, MAX_RADIUS]. Strictly monotone in the attribute, always
 * positive, and rank-preserving.
 */
export function radiusScale(doc: ExplorerDocument, mode: SizeMode): number[] {
  const values = doc.nodes.map((n) => Math.max(0, sizeValue(n, mode)));
  const max = Math.max(...values, 0);
  if (max === 0) return values.map(() => MIN_RADIUS);
  const span = MAX_RADIUS - MIN_RADIUS;
  return values.map((v) => MIN_RADIUS + span * Math.sqrt(v / max));
}

const PALETTE = [
  "#4e79a7", "#f28e2b", "#e15759", "#76b7b2", "#59a14f", "#edc948",
  "#b07aa1", "#ff9da7", "#9c755f", "#bab0ab", "#86bcb6", "#d37295",
];

export const UNIFORM_COLOR = "#4e79a7";
export const FLASH_COLOR = "#ffd400";

export function communityColor(community: number): string {
  return PALETTE[((community % PALETTE.length) + PALETTE.length) % PALETTE.length];
}
