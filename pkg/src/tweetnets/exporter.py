"""Serialize graphs (attributes, communities, positions, metadata).

Formats: the self-contained explorer JSON document consumed by the
browser UI, GraphML 1.0 and GML for suites like Gephi, and RFC-4180
edge-list CSV. All exports use stable orderings (nodes by id, links by
index) so outputs are byte-identical across runs for fixed inputs.
"""

from __future__ import annotations

import csv
import json
from pathlib import Path
from typing import Mapping
from xml.etree import ElementTree as ET

from .community import Partition
from .graph import Graph, NodeId
from .layout import LayoutResult

NETWORK_TYPES = ("retweet", "hashtag")
EVIDENCE_CAP = 100  # tweet ids kept per link in exports

_GRAPHML_NS = "http://graphml.graphdrawing.org/xmlns"


class ExportError(ValueError):
    pass


class DocumentError(ValueError):
    """An explorer document failed validation; message carries the path."""


def _assignment(partition) -> Mapping[NodeId, int]:
    return partition.assignment if isinstance(partition, Partition) else partition


def _positions(layout) -> Mapping[NodeId, tuple[float, float]]:
    return layout.positions if isinstance(layout, LayoutResult) else layout


def _check_coverage(g: Graph, mapping: Mapping, what: str) -> None:
    for node in g.nodes:
        if node not in mapping:
            raise ExportError(f"{what} does not cover node {node!r}")


def to_explorer_document(g: Graph, partition, layout, meta: Mapping) -> dict:
    """Assemble the explorer document for a graph.

    ``meta`` must carry query, collected_on, first_tweet, last_tweet and
    network_type. Link endpoints are node-list indices; node order is
    the sorted id order. Positions are rounded to 6 decimals and link
    evidence capped at EVIDENCE_CAP ids.
    """
    network_type = meta.get("network_type")
    if network_type not in NETWORK_TYPES:
        raise ExportError(f"network_type must be one of {NETWORK_TYPES}, got {network_type!r}")
    assignment = _assignment(partition)
    positions = _positions(layout)
    _check_coverage(g, assignment, "partition")
    _check_coverage(g, positions, "layout")

    order = g.sorted_nodes()
    index = {node: i for i, node in enumerate(order)}

    nodes = []
    for node in order:
        attrs = g.nodes[node]
        x, y = positions[node]
        nodes.append({
            "id": node,
            "label": str(attrs.get("label", node)),
            "community": int(assignment[node]),
            "x": round(float(x), 6),
            "y": round(float(y), 6),
            "in_degree": g.degree(node, "in", weighted=True),
            "out_degree": g.degree(node, "out", weighted=True),
            "followers": attrs.get("followers"),
            "friends": attrs.get("friends"),
        })

    links = []
    for (u, v), attrs in sorted(g.edges.items(),
                                key=lambda kv: (index[kv[0][0]], index[kv[0][1]])):
        links.append({
            "source": index[u],
            "target": index[v],
            "weight": attrs.weight,
            "tweet_ids": sorted(attrs.tweet_ids)[:EVIDENCE_CAP],
        })

    return {
        "metadata": {
            "query": meta.get("query", ""),
            "collected_on": meta.get("collected_on"),
            "first_tweet": meta.get("first_tweet"),
            "last_tweet": meta.get("last_tweet"),
            "network_type": network_type,
        },
        "nodes": nodes,
        "links": links,
    }


def write_explorer_document(doc: dict, path: str | Path) -> None:
    Path(path).write_text(json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False) + "\n",
                          encoding="utf-8")


def _require(container, key, where: str, types=None):
    if isinstance(container, dict):
        if key not in container:
            raise DocumentError(f"{where}: missing {key!r}")
        value = container[key]
    else:
        raise DocumentError(f"{where}: expected an object")
    if types is not None and not isinstance(value, types):
        raise DocumentError(f"{where}.{key}: expected {types}, got {type(value).__name__}")
    return value


def from_explorer_document(source) -> tuple[Graph, dict[NodeId, int],
                                            dict[NodeId, tuple[float, float]], dict]:
    """Inverse of to_explorer_document (up to float formatting).

    ``source`` is a path or an already-parsed document dict. Raises
    DocumentError naming the offending path on schema violations.
    """
    if isinstance(source, (str, Path)):
        try:
            doc = json.loads(Path(source).read_text(encoding="utf-8"))
        except json.JSONDecodeError as exc:
            raise DocumentError(f"document: malformed JSON: {exc}") from None
    else:
        doc = source
    meta = _require(doc, "metadata", "document", dict)
    network_type = _require(meta, "network_type", "metadata", str)
    if network_type not in NETWORK_TYPES:
        raise DocumentError(f"metadata.network_type: unknown value {network_type!r}")
    raw_nodes = _require(doc, "nodes", "document", list)
    raw_links = _require(doc, "links", "document", list)

    g = Graph(directed=network_type == "retweet")
    assignment: dict[NodeId, int] = {}
    positions: dict[NodeId, tuple[float, float]] = {}
    ids: list[NodeId] = []
    for i, entry in enumerate(raw_nodes):
        where = f"nodes[{i}]"
        node = _require(entry, "id", where, (int, str))
        attrs = {"label": _require(entry, "label", where, str)}
        for opt in ("followers", "friends"):
            if entry.get(opt) is not None:
                attrs[opt] = entry[opt]
        g.add_node(node, **attrs)
        assignment[node] = _require(entry, "community", where, int)
        positions[node] = (float(_require(entry, "x", where, (int, float))),
                           float(_require(entry, "y", where, (int, float))))
        ids.append(node)

    for i, entry in enumerate(raw_links):
        where = f"links[{i}]"
        src = _require(entry, "source", where, int)
        dst = _require(entry, "target", where, int)
        if not (0 <= src < len(ids)) or not (0 <= dst < len(ids)):
            raise DocumentError(f"{where}: endpoint index out of range")
        weight = _require(entry, "weight", where, int)
        g.add_edge(ids[src], ids[dst], weight=weight)
        evidence = entry.get("tweet_ids") or []
        g.edge(ids[src], ids[dst]).tweet_ids = list(evidence)

    return g, assignment, positions, dict(meta)


# -- GraphML ---------------------------------------------------------------

_NODE_KEYS = [
    ("label", "string"), ("community", "int"), ("x", "double"), ("y", "double"),
    ("followers", "long"), ("friends", "long"), ("uid", "long"),
]
_EDGE_KEYS = [("weight", "long"), ("tweet_ids", "string")]


def to_graphml(g: Graph, partition, layout, path: str | Path) -> None:
    """Write GraphML 1.0 with typed node/edge attribute declarations."""
    assignment = _assignment(partition)
    positions = _positions(layout)
    _check_coverage(g, assignment, "partition")
    _check_coverage(g, positions, "layout")

    root = ET.Element("graphml", xmlns=_GRAPHML_NS)
    for name, attr_type in _NODE_KEYS:
        ET.SubElement(root, "key", id=name, attrib={
            "for": "node", "attr.name": name, "attr.type": attr_type})
    for name, attr_type in _EDGE_KEYS:
        ET.SubElement(root, "key", id=name, attrib={
            "for": "edge", "attr.name": name, "attr.type": attr_type})
    graph = ET.SubElement(root, "graph", attrib={
        "id": "G", "edgedefault": "directed" if g.directed else "undirected"})

    def data(parent, key, value):
        el = ET.SubElement(parent, "data", key=key)
        el.text = str(value)

    order = g.sorted_nodes()
    index = {node: i for i, node in enumerate(order)}
    for node in order:
        attrs = g.nodes[node]
        el = ET.SubElement(graph, "node", id=str(node))
        data(el, "label", attrs.get("label", node))
        data(el, "community", int(assignment[node]))
        x, y = positions[node]
        data(el, "x", round(float(x), 6))
        data(el, "y", round(float(y), 6))
        for opt in ("followers", "friends"):
            if attrs.get(opt) is not None:
                data(el, opt, int(attrs[opt]))
        if isinstance(node, int):
            data(el, "uid", node)

    for (u, v), attrs in sorted(g.edges.items(),
                                key=lambda kv: (index[kv[0][0]], index[kv[0][1]])):
        el = ET.SubElement(graph, "edge", source=str(u), target=str(v))
        data(el, "weight", attrs.weight)
        if attrs.tweet_ids:
            data(el, "tweet_ids", " ".join(str(t) for t in sorted(attrs.tweet_ids)[:EVIDENCE_CAP]))

    ET.indent(root)
    tree = ET.ElementTree(root)
    tree.write(path, encoding="utf-8", xml_declaration=True)


def from_graphml(path: str | Path) -> tuple[Graph, dict[NodeId, int],
                                            dict[NodeId, tuple[float, float]]]:
    """Re-import a GraphML file written by to_graphml."""
    ns = {"g": _GRAPHML_NS}
    root = ET.parse(path).getroot()
    graph_el = root.find("g:graph", ns)
    if graph_el is None:
        raise DocumentError("graphml: missing <graph> element")
    g = Graph(directed=graph_el.get("edgedefault") == "directed")
    assignment: dict[NodeId, int] = {}
    positions: dict[NodeId, tuple[float, float]] = {}
    by_xml_id: dict[str, NodeId] = {}

    for el in graph_el.findall("g:node", ns):
        values = {d.get("key"): d.text for d in el.findall("g:data", ns)}
        node: NodeId = int(values["uid"]) if "uid" in values else el.get("id")
        by_xml_id[el.get("id")] = node
        attrs = {"label": values.get("label", str(node))}
        for opt in ("followers", "friends"):
            if opt in values:
                attrs[opt] = int(values[opt])
        g.add_node(node, **attrs)
        assignment[node] = int(values["community"])
        positions[node] = (float(values["x"]), float(values["y"]))

    for el in graph_el.findall("g:edge", ns):
        values = {d.get("key"): d.text for d in el.findall("g:data", ns)}
        u = by_xml_id[el.get("source")]
        v = by_xml_id[el.get("target")]
        g.add_edge(u, v, weight=int(values["weight"]))
        if values.get("tweet_ids"):
            g.edge(u, v).tweet_ids = [int(t) for t in values["tweet_ids"].split()]
    return g, assignment, positions


# -- GML and CSV -------------------------------------------------------------

def _gml_escape(text: str) -> str:
    escaped = text.replace("&", "&amp;").replace('"', "&quot;")
    return escaped.encode("ascii", "xmlcharrefreplace").decode("ascii")


def to_gml(g: Graph, partition, layout, path: str | Path) -> None:
    """Write GML: integer node ids (list indices) with display labels."""
    assignment = _assignment(partition)
    positions = _positions(layout)
    _check_coverage(g, assignment, "partition")
    _check_coverage(g, positions, "layout")

    order = g.sorted_nodes()
    index = {node: i for i, node in enumerate(order)}
    lines = ["graph [", f"  directed {1 if g.directed else 0}"]
    for node in order:
        attrs = g.nodes[node]
        x, y = positions[node]
        lines += [
            "  node [",
            f"    id {index[node]}",
            f'    label "{_gml_escape(str(attrs.get("label", node)))}"',
            f"    community {int(assignment[node])}",
            f"    x {round(float(x), 6)}",
            f"    y {round(float(y), 6)}",
            "  ]",
        ]
    for (u, v), attrs in sorted(g.edges.items(),
                                key=lambda kv: (index[kv[0][0]], index[kv[0][1]])):
        lines += [
            "  edge [",
            f"    source {index[u]}",
            f"    target {index[v]}",
            f"    weight {attrs.weight}",
            "  ]",
        ]
    lines.append("]")
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def to_edgelist_csv(g: Graph, path: str | Path) -> None:
    """RFC-4180 CSV with columns source,target,weight (node ids)."""
    order = g.sorted_nodes()
    index = {node: i for i, node in enumerate(order)}
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["source", "target", "weight"])
        for (u, v), attrs in sorted(g.edges.items(),
                                    key=lambda kv: (index[kv[0][0]], index[kv[0][1]])):
            writer.writerow([u, v, attrs.weight])


def export_graph(g: Graph, partition, layout, meta: Mapping, path: str | Path,
                 fmt: str | None = None) -> None:
    """Dispatch on format name or file extension."""
    path = Path(path)
    fmt = fmt or {
        ".json": "explorer", ".graphml": "graphml", ".gml": "gml", ".csv": "csv",
    }.get(path.suffix.lower())
    if fmt == "explorer":
        write_explorer_document(to_explorer_document(g, partition, layout, meta), path)
    elif fmt == "graphml":
        to_graphml(g, partition, layout, path)
    elif fmt == "gml":
        to_gml(g, partition, layout, path)
    elif fmt == "csv":
        to_edgelist_csv(g, path)
    else:
        raise ExportError(f"cannot infer export format for {path.name!r}")
