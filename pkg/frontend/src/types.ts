/** Schema of the network documents produced by the tweetnets exporter. */

export interface DocumentMetadata {
  query: string;
  collected_on: number | null;
  first_tweet: number | null;
  last_tweet: number | null;
  network_type: "retweet" | "hashtag";
}

export interface DocumentNode {
  id: number | string;
  label: string;
  community: number;
  x: number;
  y: number;
  in_degree: number;
  out_degree: number;
  followers: number | null;
  friends: number | null;
}

export interface DocumentLink {
  source: number; // index into nodes
  target: number;
  weight: number;
  tweet_ids: number[];
}

export interface ExplorerDocument {
  metadata: DocumentMetadata;
  nodes: DocumentNode[];
  links: DocumentLink[];
}

export type ColorMode = "community" | "uniform";

export type SizeMode =
  | "in_degree"
  | "out_degree"
  | "followers"
  | "friends"
  | "uniform";

export interface ViewState {
  colorMode: ColorMode;
  sizeMode: SizeMode;
  selectedNode: number | null; // node index
  searchQuery: string;
}

export const initialViewState = (): ViewState => ({
  colorMode: "community",
  sizeMode: "in_degree",
  selectedNode: null,
  searchQuery: "",
});
