"""tweetnets: tweet corpora in, explorable interaction networks out."""

from .builders import (
    HashtagNetworkOptions,
    RetweetNetworkOptions,
    build_hashtag_network,
    build_retweet_network,
)
from .collector import (
    ApiCredentials,
    CollectionSession,
    RateBudget,
    collect,
    obtain_bearer,
    search_page,
)
from .community import LouvainParams, Partition, UndefinedModularityError, louvain, modularity
from .corpus import (
    CorpusReader,
    OverlapReport,
    TimelineSeries,
    Tweet,
    TweetParseError,
    UserRef,
    load_corpus,
    overlap,
    parse_tweet,
    read_corpus,
    serialize_tweet,
    timeline,
)
from .exporter import (
    DocumentError,
    ExportError,
    export_graph,
    from_explorer_document,
    from_graphml,
    to_edgelist_csv,
    to_explorer_document,
    to_gml,
    to_graphml,
    write_explorer_document,
)
from .graph import EdgeAttrs, Graph, filter_min_degree, giant_component, weakly_connected_components
from .layout import LayoutParams, LayoutResult, force_layout
from .quadtree import QuadTree, quadtree_force

__version__ = "0.1.0"

__all__ = [
    "ApiCredentials",
    "CollectionSession",
    "CorpusReader",
    "DocumentError",
    "EdgeAttrs",
    "ExportError",
    "Graph",
    "HashtagNetworkOptions",
    "LayoutParams",
    "LayoutResult",
    "LouvainParams",
    "OverlapReport",
    "Partition",
    "QuadTree",
    "RateBudget",
    "RetweetNetworkOptions",
    "TimelineSeries",
    "Tweet",
    "TweetParseError",
    "UndefinedModularityError",
    "UserRef",
    "build_hashtag_network",
    "build_retweet_network",
    "collect",
    "export_graph",
    "filter_min_degree",
    "force_layout",
    "from_explorer_document",
    "from_graphml",
    "giant_component",
    "load_corpus",
    "louvain",
    "modularity",
    "obtain_bearer",
    "overlap",
    "parse_tweet",
    "quadtree_force",
    "read_corpus",
    "search_page",
    "serialize_tweet",
    "timeline",
    "to_edgelist_csv",
    "to_explorer_document",
    "to_gml",
    "to_graphml",
    "weakly_connected_components",
    "write_explorer_document",
]
