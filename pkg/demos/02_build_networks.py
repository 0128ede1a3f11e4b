#!/usr/bin/env python3
"""Build the two network types from one corpus and reduce them for display.

Retweet networks answer "who amplifies whom" (directed, weighted);
hashtag co-occurrence networks sketch the vocabulary of the debate
(undirected). Both usually need a reduction before they are readable.
"""

from tweetnets import (
    HashtagNetworkOptions,
    build_hashtag_network,
    build_retweet_network,
    filter_min_degree,
    giant_component,
    weakly_connected_components,
)
from tweetnets.synthetic import synthetic_tweets

tweets = synthetic_tweets(3000, seed=12, n_users=60)

rt = build_retweet_network(tweets)
print(f"retweet network: {rt.number_of_nodes()} users, {rt.number_of_edges()} links, "
      f"total weight {rt.total_weight()}")

most_retweeted = max(rt.nodes, key=lambda n: rt.degree(n, "in", weighted=True))
print(f"most retweeted: @{rt.nodes[most_retweeted]['label']} "
      f"({rt.degree(most_retweeted, 'in', weighted=True)} retweets, "
      f"{rt.nodes[most_retweeted]['followers']} followers)")

components = weakly_connected_components(rt)
print(f"components: {len(components)}, sizes {sorted(map(len, components), reverse=True)[:5]}...")

core = filter_min_degree(giant_component(rt), 3)
print(f"giant component, then one-pass min-degree-3 filter: "
      f"{core.number_of_nodes()} users, {core.number_of_edges()} links")

ht = build_hashtag_network(tweets, HashtagNetworkOptions(min_cooccurrence=2))
print(f"\nhashtag network (pairs seen twice or more): "
      f"{ht.number_of_nodes()} tags, {ht.number_of_edges()} links")
heaviest = max(ht.edges, key=lambda e: ht.edges[e].weight)
a, b = heaviest
print(f"strongest pairing: #{ht.nodes[a]['label']} with #{ht.nodes[b]['label']} "
      f"({ht.edges[heaviest].weight} tweets, e.g. ids "
      f"{ht.edges[heaviest].tweet_ids[:4]})")
