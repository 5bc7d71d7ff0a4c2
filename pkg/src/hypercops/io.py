"""JSON file formats: hypergraphs, dismantling certificates, match traces."""

from __future__ import annotations

import json
from pathlib import Path

from .construct import render_label
from .core import Hypergraph


class ParseError(ValueError):
    """Hypergraph file rejected; ``code`` names the failure, ``location`` points at it."""

    def __init__(self, code: str, message: str, location: str = ""):
        where = f" at {location}" if location else ""
        super().__init__(f"{code}{where}: {message}")
        self.code = code
        self.location = location


def _ident(x, loc: str) -> str:
    if isinstance(x, bool) or not isinstance(x, (str, int)):
        raise ParseError("BAD_IDENTIFIER", f"identifier must be a string, got {x!r}", loc)
    return str(x)


def parse_hypergraph(data: bytes | str) -> Hypergraph:
    """Validated hypergraph from ``{"name"?, "vertices": [...], "edges": [[...], ...]}``."""
    name, h = parse_hypergraph_named(data)
    return h


def parse_hypergraph_named(data: bytes | str) -> tuple[str | None, Hypergraph]:
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError("MALFORMED_JSON", f"not UTF-8: {exc}") from None
    try:
        doc = json.loads(data)
    except json.JSONDecodeError as exc:
        raise ParseError("MALFORMED_JSON", exc.msg, f"line {exc.lineno} column {exc.colno}") from None
    if not isinstance(doc, dict):
        raise ParseError("SCHEMA", "top level must be an object")
    for key in ("vertices", "edges"):
        if not isinstance(doc.get(key), list):
            raise ParseError("SCHEMA", f"missing or non-list {key!r}")
    name = doc.get("name")
    if name is not None and not isinstance(name, str):
        raise ParseError("SCHEMA", "name must be a string", "name")

    vertices: list[str] = []
    seen: set[str] = set()
    for i, v in enumerate(doc["vertices"]):
        v = _ident(v, f"vertices[{i}]")
        if v in seen:
            raise ParseError("DUPLICATE_VERTEX", f"vertex {v!r} listed twice", f"vertices[{i}]")
        seen.add(v)
        vertices.append(v)

    edges: list[frozenset] = []
    first: dict[frozenset, int] = {}
    for i, e in enumerate(doc["edges"]):
        loc = f"edges[{i}]"
        if not isinstance(e, list):
            raise ParseError("SCHEMA", "edge must be a list", loc)
        members = [_ident(x, f"{loc}[{j}]") for j, x in enumerate(e)]
        if not members:
            raise ParseError("EMPTY_EDGE", "edges need at least one vertex", loc)
        for j, x in enumerate(members):
            if x not in seen:
                raise ParseError("UNKNOWN_VERTEX", f"vertex {x!r} is not declared", f"{loc}[{j}]")
        if len(set(members)) != len(members):
            raise ParseError("REPEATED_MEMBER", "edge lists a vertex twice", loc)
        f = frozenset(members)
        if f in first:
            raise ParseError("DUPLICATE_EDGE", f"same vertex set as edges[{first[f]}]", loc)
        first[f] = i
        edges.append(f)
    return name, Hypergraph(vertices, edges)


def hypergraph_to_json(h: Hypergraph, name: str | None = None) -> dict:
    doc: dict = {}
    if name is not None:
        doc["name"] = name
    doc["vertices"] = [render_label(v) for v in h.vertices]
    doc["edges"] = [[render_label(v) for v in h.sort_vertices(e)] for e in h.edges]
    return doc


def serialise_hypergraph(h: Hypergraph, name: str | None = None) -> str:
    """Canonical text: vertices in vertex order, each edge's members in vertex
    order, edges sorted lexicographically by those member positions."""
    doc = hypergraph_to_json(h, name)
    lines = ["{"]
    if name is not None:
        lines.append(f"  \"name\": {json.dumps(name)},")
    lines.append(f"  \"vertices\": {json.dumps(doc['vertices'])},")
    if doc["edges"]:
        lines.append("  \"edges\": [")
        lines.append(",\n".join(f"    {json.dumps(e)}" for e in doc["edges"]))
        lines.append("  ]")
    else:
        lines.append("  \"edges\": []")
    lines.append("}")
    return "\n".join(lines) + "\n"


def as_string_labels(h: Hypergraph) -> Hypergraph:
    """Same hypergraph with every vertex replaced by its rendered label."""
    return h.relabel(render_label)


def load_hypergraph(path: str | Path) -> Hypergraph:
    return parse_hypergraph(Path(path).read_bytes())


def write_text(path: str | Path | None, text: str) -> None:
    if path is None or str(path) == "-":
        print(text, end="")
    else:
        Path(path).write_text(text)
