/** The command palette: small DOM panels fed only by the document. */

import {
  communityCount,
  formatTimestamp,
  measures,
  statusUrl,
  tweetIdsForNode,
} from "./document.js";
import type { ExplorerDocument } from "./types.js";

const MAX_LINKED_TWEETS = 20;

function el(tag: string, className: string, text?: string): HTMLElement {
  const node = document.createElement(tag);
  node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

function row(dl: HTMLElement, term: string, value: string): void {
  dl.appendChild(el("dt", "tn-term", term));
  dl.appendChild(el("dd", "tn-value", value));
}

export function renderNetworkInfo(target: HTMLElement, doc: ExplorerDocument): void {
  target.replaceChildren();
  const dl = el("dl", "tn-dl");
  const meta = doc.metadata;
  row(dl, "keywords", meta.query || "(none recorded)");
  row(dl, "network", meta.network_type);
  row(dl, "collected", formatTimestamp(meta.collected_on));
  row(dl, "first tweet", formatTimestamp(meta.first_tweet));
  row(dl, "last tweet", formatTimestamp(meta.last_tweet));
  target.appendChild(dl);
}

export function renderMeasures(target: HTMLElement, doc: ExplorerDocument): void {
  target.replaceChildren();
  const m = measures(doc);
  const dl = el("dl", "tn-dl");
  row(dl, "nodes", String(m.nodeCount));
  row(dl, "links", String(m.linkCount));
  row(dl, "communities", String(communityCount(doc)));
  target.appendChild(dl);
}

function appendTweetLinks(target: HTMLElement, doc: ExplorerDocument, index: number): void {
  const ids = tweetIdsForNode(doc, index);
  if (ids.length === 0) return;
  target.appendChild(el("p", "tn-tweets-head",
    `tweets in the dataset (${ids.length})`));
  const list = el("ul", "tn-tweet-list");
  for (const id of ids.slice(0, MAX_LINKED_TWEETS)) {
    const item = document.createElement("li");
    const link = document.createElement("a");
    link.href = statusUrl(id);
    link.target = "_blank";
    link.rel = "noopener";
    link.textContent = String(id);
    item.appendChild(link);
    list.appendChild(item);
  }
  target.appendChild(list);
}

export function renderNodeDetails(
  target: HTMLElement,
  doc: ExplorerDocument,
  index: number | null,
): void {
  target.replaceChildren();
  if (index === null) {
    target.appendChild(el("p", "tn-hint", "click or hover a node"));
    return;
  }
  const node = doc.nodes[index];
  const isUser = doc.metadata.network_type === "retweet";
  target.appendChild(el("h3", "tn-node-label",
    (isUser ? "@" : "#") + node.label));
  const dl = el("dl", "tn-dl");
  if (isUser) {
    row(dl, "followers", node.followers === null ? "unknown" : String(node.followers));
    row(dl, "follows", node.friends === null ? "unknown" : String(node.friends));
    row(dl, "times retweeted", String(node.in_degree));
    row(dl, "retweets made", String(node.out_degree));
  } else {
    row(dl, "co-occurrence weight", String(node.in_degree));
  }
  row(dl, "community", String(node.community));
  target.appendChild(dl);
  appendTweetLinks(target, doc, index);
}

export function renderSearchResult(
  target: HTMLElement,
  doc: ExplorerDocument,
  index: number | null,
  query: string,
): void {
  target.replaceChildren();
  if (!query.trim()) return;
  if (index === null) {
    target.appendChild(el("p", "tn-not-found", `no node matching "${query}"`));
    return;
  }
  renderNodeDetails(target, doc, index);
}
