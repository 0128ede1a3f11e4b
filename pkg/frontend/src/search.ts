/** User search: find a node by label, exact first, then prefix. */

import type { ExplorerDocument } from "./types.js";

export function findNode(doc: ExplorerDocument, query: string): number | null {
  const needle = query.trim().replace(/^[@#]/, "").toLowerCase();
  if (!needle) return null;
  let prefixHit: number | null = null;
  for (let i = 0; i < doc.nodes.length; i++) {
    const label = doc.nodes[i].label.toLowerCase();
    if (label === needle) return i;
    if (prefixHit === null && label.startsWith(needle)) prefixHit = i;
  }
  return prefixHit;
}
