"""Command-line pipeline: collect -> build -> detect -> layout -> export.

Each subcommand validates its inputs, prints a single-line JSON run
summary on stdout (seeds are always echoed), and exits 0 on success or
nonzero with a diagnostic on stderr. Intermediate pipeline state is the
explorer document itself, so every stage is resumable and inspectable.
"""

from __future__ import annotations

import argparse
import functools
import http.server
import json
import os
import sys
from pathlib import Path

from . import collector as collector_mod
from . import corpus as corpus_mod
from .builders import HashtagNetworkOptions, RetweetNetworkOptions, \
    build_hashtag_network, build_retweet_network
from .community import LouvainParams, UndefinedModularityError, louvain
from .exporter import ExportError, export_graph, from_explorer_document, \
    to_explorer_document, write_explorer_document
from .graph import filter_min_degree, giant_component
from .layout import LayoutParams, force_layout

DEFAULT_SEED = 42


class CliError(Exception):
    pass


def _parse_time(value: str) -> int:
    try:
        return int(value)
    except ValueError:
        return corpus_mod.parse_created_at(value)


def _read_config(path: str) -> dict[str, str]:
    """Simple key = value lines; # starts a comment."""
    config: dict[str, str] = {}
    for raw in Path(path).read_text(encoding="utf-8").splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise CliError(f"bad config line: {raw!r}")
        key, value = line.split("=", 1)
        config[key.strip()] = value.strip()
    return config


def _credentials(args) -> collector_mod.ApiCredentials:
    if args.credentials_file:
        config = _read_config(args.credentials_file)
        return collector_mod.ApiCredentials(
            consumer_key=config.get("consumer_key", ""),
            consumer_secret=config.get("consumer_secret", ""),
            bearer_token=config.get("bearer_token") or None,
        )
    return collector_mod.ApiCredentials.from_env(os.environ, prefix=args.credentials_env)


def _summary(payload: dict) -> None:
    print(json.dumps(payload, sort_keys=True), flush=True)


def cmd_collect(args) -> int:
    credentials = _credentials(args)
    session = collector_mod.collect(
        query=args.query, sink=args.output, endpoint=args.endpoint,
        credentials=credentials, count=args.count)
    _summary({
        "command": "collect", "query": session.query,
        "pages_fetched": session.pages_fetched,
        "tweets_written": session.tweets_written,
        "duplicates_skipped": session.duplicates_skipped,
        "oldest_id": session.oldest_id, "newest_id": session.newest_id,
        "output": str(args.output),
    })
    return 0


def cmd_build(args) -> int:
    tweets, skipped = corpus_mod.load_corpus(args.input)
    window = None
    if args.since is not None or args.until is not None:
        window = (args.since if args.since is not None else -2**62,
                  args.until if args.until is not None else 2**62)
    if args.type == "retweet":
        opts = RetweetNetworkOptions(language_filter=args.language, time_window=window)
        g = build_retweet_network(tweets, opts)
    else:
        exclude = frozenset(t for t in (args.exclude_tags or "").split(",") if t)
        opts = HashtagNetworkOptions(exclude_tags=exclude,
                                     min_cooccurrence=args.min_cooccurrence)
        g = build_hashtag_network(tweets, opts)

    if args.min_degree > 0:
        g = filter_min_degree(g, args.min_degree, mode=args.degree_mode)
    if args.giant_component:
        g = giant_component(g)

    stamps = [t.created_at for t in tweets]
    meta = {
        "query": args.query_label,
        "collected_on": args.collected_on if args.collected_on is not None
        else (max(stamps) if stamps else None),
        "first_tweet": min(stamps) if stamps else None,
        "last_tweet": max(stamps) if stamps else None,
        "network_type": args.type,
    }
    zero = {n: 0 for n in g.nodes}
    origin = {n: (0.0, 0.0) for n in g.nodes}
    write_explorer_document(to_explorer_document(g, zero, origin, meta), args.output)
    _summary({
        "command": "build", "type": args.type,
        "tweets": len(tweets), "skipped_lines": skipped,
        "nodes": g.number_of_nodes(), "edges": g.number_of_edges(),
        "output": str(args.output),
    })
    return 0


def cmd_detect(args) -> int:
    g, _, positions, meta = from_explorer_document(args.input)
    params = LouvainParams(resolution=args.resolution, seed=args.seed)
    try:
        partition = louvain(g, params)
    except UndefinedModularityError:
        if g.number_of_nodes() > 0:
            raise
        from .community import Partition
        partition = Partition(assignment={}, community_count=0, modularity=0.0)
    write_explorer_document(
        to_explorer_document(g, partition.assignment, positions, meta), args.output)
    _summary({
        "command": "detect", "seed": args.seed, "resolution": args.resolution,
        "communities": partition.community_count,
        "modularity": round(partition.modularity, 6),
        "output": str(args.output),
    })
    return 0


def cmd_layout(args) -> int:
    g, assignment, _, meta = from_explorer_document(args.input)
    params = LayoutParams(iterations=args.iterations, theta=args.theta,
                          seed=args.seed, attraction_model=args.model)
    if g.number_of_nodes() == 0:
        positions = {}
        iterations_run = 0
    else:
        result = force_layout(g, params)
        positions = result.positions
        iterations_run = result.iterations_run
    write_explorer_document(
        to_explorer_document(g, assignment, positions, meta), args.output)
    _summary({
        "command": "layout", "seed": args.seed, "model": args.model,
        "theta": args.theta, "iterations_run": iterations_run,
        "output": str(args.output),
    })
    return 0


def cmd_export(args) -> int:
    g, assignment, positions, meta = from_explorer_document(args.input)
    export_graph(g, assignment, positions, meta, args.output, fmt=args.format)
    _summary({
        "command": "export", "format": args.format or Path(args.output).suffix.lstrip("."),
        "nodes": g.number_of_nodes(), "edges": g.number_of_edges(),
        "output": str(args.output),
    })
    return 0


def cmd_stats(args) -> int:
    if args.overlap:
        reference_path, candidate_path = args.overlap
        reference, _ = corpus_mod.load_corpus(reference_path)
        candidate, _ = corpus_mod.load_corpus(candidate_path)
        report = corpus_mod.overlap({t.id for t in reference},
                                    {t.id for t in candidate}, reference)
        _summary({
            "command": "stats", "mode": "overlap",
            "reference_size": report.reference_size,
            "candidate_size": report.candidate_size,
            "shared": report.shared,
            "containment": round(report.containment, 6),
            "missing_original_fraction": round(report.missing_original_fraction, 6),
            "missing_retweet_fraction": round(report.missing_retweet_fraction, 6),
        })
        return 0
    if not args.input:
        raise CliError("stats needs --input for a timeline, or --overlap")
    tweets, skipped = corpus_mod.load_corpus(args.input)
    series = corpus_mod.timeline(tweets, args.timeline_bin)
    _summary({
        "command": "stats", "mode": "timeline",
        "bin_width": series.bin_width,
        "tweets": len(tweets), "skipped_lines": skipped,
        "bins": [[start, count] for start, count in series.bins],
    })
    return 0


def cmd_serve(args) -> int:
    handler = functools.partial(http.server.SimpleHTTPRequestHandler,
                                directory=str(args.dir))
    httpd = http.server.ThreadingHTTPServer(("127.0.0.1", args.port), handler)
    host, port = httpd.server_address
    _summary({"command": "serve", "dir": str(args.dir), "url": f"http://{host}:{port}"})
    try:
        httpd.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        httpd.server_close()
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tweetnets",
        description="Turn raw tweet corpora into explorable interaction networks.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("collect", help="page a search endpoint into a JSONL corpus")
    p.add_argument("--query", required=True)
    p.add_argument("--output", required=True)
    p.add_argument("--endpoint", required=True, help="search endpoint URL")
    p.add_argument("--credentials-env", default="",
                   help="environment variable prefix for CONSUMER_KEY/"
                        "CONSUMER_SECRET/BEARER_TOKEN")
    p.add_argument("--credentials-file", default=None,
                   help="key = value file with consumer_key/consumer_secret/bearer_token")
    p.add_argument("--count", type=int, default=collector_mod.PAGE_SIZE)
    p.set_defaults(func=cmd_collect)

    p = sub.add_parser("build", help="build a network from a JSONL corpus")
    p.add_argument("--input", required=True)
    p.add_argument("--output", required=True)
    p.add_argument("--type", choices=["retweet", "hashtag"], required=True)
    p.add_argument("--giant-component", action="store_true")
    p.add_argument("--min-degree", type=int, default=0, metavar="K")
    p.add_argument("--degree-mode", choices=["in", "out", "total"], default="total")
    p.add_argument("--language", default=None)
    p.add_argument("--since", type=_parse_time, default=None)
    p.add_argument("--until", type=_parse_time, default=None)
    p.add_argument("--exclude-tags", default="", help="comma-separated hashtags to drop")
    p.add_argument("--min-cooccurrence", type=int, default=1)
    p.add_argument("--query-label", default="", help="query string recorded in metadata")
    p.add_argument("--collected-on", type=_parse_time, default=None,
                   help="collection timestamp for metadata (default: last tweet)")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("detect", help="Louvain community detection on a document")
    p.add_argument("--input", required=True)
    p.add_argument("--output", required=True)
    p.add_argument("--resolution", type=float, default=1.0)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.set_defaults(func=cmd_detect)

    p = sub.add_parser("layout", help="force-directed layout on a document")
    p.add_argument("--input", required=True)
    p.add_argument("--output", required=True)
    p.add_argument("--iterations", type=int, default=300)
    p.add_argument("--theta", type=float, default=0.7)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--model", choices=["spring", "linlog"], default="spring")
    p.set_defaults(func=cmd_layout)

    p = sub.add_parser("export", help="export a document to an interchange format")
    p.add_argument("--input", required=True)
    p.add_argument("--output", required=True)
    p.add_argument("--format", choices=["explorer", "graphml", "gml", "csv"], default=None)
    p.set_defaults(func=cmd_export)

    p = sub.add_parser("stats", help="corpus statistics: timeline or overlap")
    p.add_argument("--input", default=None, help="JSONL corpus for the timeline")
    p.add_argument("--timeline-bin", type=int, default=3600,
                   help="timeline bin width in seconds (default 1 hour)")
    p.add_argument("--overlap", nargs=2, metavar=("REFERENCE", "CANDIDATE"), default=None)
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("serve", help="serve exported documents and the explorer UI")
    p.add_argument("--dir", default=".")
    p.add_argument("--port", type=int, default=8000)
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (CliError, ExportError, ValueError, OSError,
            collector_mod.CollectorError) as exc:
        print(f"tweetnets {args.command}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
