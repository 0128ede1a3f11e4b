/** Loading, validation, and read-only derivations over a network document.
 *
 * The UI never mutates the document; every figure shown in the palette is
 * derived from it alone, with no further network calls.
 */

import type { DocumentLink, DocumentNode, ExplorerDocument } from "./types.js";

export class DocumentFormatError extends Error {}

function fail(path: string, message: string): never {
  throw new DocumentFormatError(`${path}: ${message}`);
}

function checkNumber(value: unknown, path: string): number {
  if (typeof value !== "number" || !Number.isFinite(value)) {
    fail(path, `expected a finite number, got ${JSON.stringify(value)}`);
  }
  return value;
}

export function parseDocument(raw: unknown): ExplorerDocument {
  if (typeof raw !== "object" || raw === null) fail("document", "not an object");
  const doc = raw as Record<string, unknown>;
  const meta = doc.metadata as Record<string, unknown> | undefined;
  if (!meta || typeof meta !== "object") fail("metadata", "missing");
  if (meta.network_type !== "retweet" && meta.network_type !== "hashtag") {
    fail("metadata.network_type", `unknown value ${JSON.stringify(meta.network_type)}`);
  }
  if (!Array.isArray(doc.nodes)) fail("nodes", "missing or not a list");
  if (!Array.isArray(doc.links)) fail("links", "missing or not a list");

  const nodes: DocumentNode[] = doc.nodes.map((entry, i) => {
    const n = entry as Record<string, unknown>;
    const path = `nodes[${i}]`;
    if (typeof n.id !== "number" && typeof n.id !== "string") fail(`${path}.id`, "missing");
    if (typeof n.label !== "string") fail(`${path}.label`, "missing");
    return {
      id: n.id,
      label: n.label,
      community: checkNumber(n.community, `${path}.community`),
      x: checkNumber(n.x, `${path}.x`),
      y: checkNumber(n.y, `${path}.y`),
      in_degree: checkNumber(n.in_degree, `${path}.in_degree`),
      out_degree: checkNumber(n.out_degree, `${path}.out_degree`),
      followers: n.followers == null ? null : checkNumber(n.followers, `${path}.followers`),
      friends: n.friends == null ? null : checkNumber(n.friends, `${path}.friends`),
    };
  });

  const links: DocumentLink[] = doc.links.map((entry, i) => {
    const l = entry as Record<string, unknown>;
    const path = `links[${i}]`;
    const source = checkNumber(l.source, `${path}.source`);
    const target = checkNumber(l.target, `${path}.target`);
    if (source < 0 || source >= nodes.length || target < 0 || target >= nodes.length) {
      fail(path, "endpoint index out of range");
    }
    return {
      source,
      target,
      weight: checkNumber(l.weight, `${path}.weight`),
      tweet_ids: Array.isArray(l.tweet_ids) ? (l.tweet_ids as number[]) : [],
    };
  });

  return {
    metadata: {
      query: String(meta.query ?? ""),
      collected_on: meta.collected_on == null ? null : checkNumber(meta.collected_on, "metadata.collected_on"),
      first_tweet: meta.first_tweet == null ? null : checkNumber(meta.first_tweet, "metadata.first_tweet"),
      last_tweet: meta.last_tweet == null ? null : checkNumber(meta.last_tweet, "metadata.last_tweet"),
      network_type: meta.network_type,
    },
    nodes,
    links,
  };
}

export async function loadDocument(url: string): Promise<ExplorerDocument> {
  const response = await fetch(url);
  if (!response.ok) {
    throw new DocumentFormatError(`${url}: HTTP ${response.status}`);
  }
  return parseDocument(await response.json());
}

export interface Measures {
  nodeCount: number;
  linkCount: number;
}

export function measures(doc: ExplorerDocument): Measures {
  return { nodeCount: doc.nodes.length, linkCount: doc.links.length };
}

/** Tweet ids evidencing any link incident to the node, deduplicated. */
export function tweetIdsForNode(doc: ExplorerDocument, index: number): number[] {
  const ids = new Set<number>();
  for (const link of doc.links) {
    if (link.source === index || link.target === index) {
      for (const id of link.tweet_ids) ids.add(id);
    }
  }
  return [...ids].sort((a, b) => a - b);
}

export function communityCount(doc: ExplorerDocument): number {
  return new Set(doc.nodes.map((n) => n.community)).size;
}

export const formatTimestamp = (seconds: number | null): string =>
  seconds == null ? "unknown" : new Date(seconds * 1000).toISOString().replace("T", " ").slice(0, 19) + " UTC";

/** Stable deep link to a status; shown instead of embedding content. */
export const statusUrl = (tweetId: number): string =>
  `https://twitter.com/i/web/status/${tweetId}`;
