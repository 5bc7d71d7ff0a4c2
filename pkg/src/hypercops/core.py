"""Hypergraph value type, 2-section, neighbourhoods and the two vertex-deletion operators."""

from __future__ import annotations

from collections.abc import Hashable, Iterable
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

Vertex = Hashable


class HypergraphError(ValueError):
    """Raised for malformed hypergraphs or references to unknown vertices."""


@dataclass(frozen=True, eq=False)
class Hypergraph:
    """A finite hypergraph with a fixed vertex order.

    Edges are stored as frozensets, deduplicated, and kept in a canonical
    order (lexicographic on the sorted vertex indices) so two hypergraphs with
    the same vertex order and the same edge family compare equal.
    """

    vertices: tuple[Vertex, ...]
    edges: tuple[frozenset, ...]

    def __init__(self, vertices: Iterable[Vertex], edges: Iterable[Iterable[Vertex]] = ()):
        verts = tuple(vertices)
        if len(set(verts)) != len(verts):
            raise HypergraphError("duplicate vertex identifiers")
        index = {v: i for i, v in enumerate(verts)}
        seen = set()
        for e in edges:
            f = frozenset(e)
            if not f:
                raise HypergraphError("empty edge")
            missing = [v for v in f if v not in index]
            if missing:
                raise HypergraphError(f"edge {sorted(map(str, f))} uses unknown vertex {missing[0]!r}")
            seen.add(f)
        ordered = sorted(seen, key=lambda f: sorted(index[v] for v in f))
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "edges", tuple(ordered))

    @classmethod
    def from_edges(cls, edges: Iterable[Iterable[Vertex]]) -> Hypergraph:
        """Vertex order is first appearance, scanning edges in the given order."""
        edges = [list(e) for e in edges]
        verts: dict[Vertex, None] = {}
        for e in edges:
            for v in e:
                verts.setdefault(v)
        return cls(verts, edges)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Hypergraph):
            return NotImplemented
        return self.vertices == other.vertices and set(self.edges) == set(other.edges)

    def __hash__(self) -> int:
        return hash((self.vertices, frozenset(self.edges)))

    def __repr__(self) -> str:
        es = ", ".join("{" + ",".join(map(str, self.sort_vertices(e))) + "}" for e in self.edges)
        return f"Hypergraph(V={list(self.vertices)}, E=[{es}])"

    def __len__(self) -> int:
        return len(self.vertices)

    def __contains__(self, v: object) -> bool:
        return v in self.index

    @cached_property
    def index(self) -> dict[Vertex, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    def sort_vertices(self, vs: Iterable[Vertex]) -> list[Vertex]:
        return sorted(vs, key=self.index.__getitem__)

    def require(self, x: Vertex) -> int:
        try:
            return self.index[x]
        except (KeyError, TypeError):
            raise HypergraphError(f"unknown vertex {x!r}") from None

    @cached_property
    def is_graph(self) -> bool:
        return all(len(e) == 2 for e in self.edges)

    @cached_property
    def _closed(self) -> dict[Vertex, frozenset]:
        nb: dict[Vertex, set] = {v: {v} for v in self.vertices}
        for e in self.edges:
            if len(e) < 2:
                continue
            for v in e:
                nb[v].update(e)
        return {v: frozenset(s) for v, s in nb.items()}

    def closed(self, x: Vertex) -> frozenset:
        """N[x] as a frozenset (no validation beyond a KeyError)."""
        return self._closed[x]

    @cached_property
    def closed_idx(self) -> tuple[tuple[int, ...], ...]:
        """N[x] for every vertex, as sorted index tuples in vertex order."""
        idx = self.index
        return tuple(tuple(sorted(idx[u] for u in self._closed[v])) for v in self.vertices)

    @cached_property
    def open_idx(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(u for u in nb if u != i) for i, nb in enumerate(self.closed_idx))

    def relabel(self, mapping) -> Hypergraph:
        """Rename vertices; ``mapping`` is a dict or a callable."""
        f = mapping.__getitem__ if isinstance(mapping, dict) else mapping
        return Hypergraph([f(v) for v in self.vertices], [[f(v) for v in e] for e in self.edges])


@dataclass(frozen=True)
class NeighborSet:
    vertex: Vertex
    closed_neighborhood: frozenset


def _nonempty(h: Hypergraph) -> None:
    if not h.vertices:
        raise HypergraphError("hypergraph has no vertices")


def two_section(h: Hypergraph) -> Hypergraph:
    """The graph on V(h) joining every pair of distinct vertices sharing an edge."""
    _nonempty(h)
    pairs = set()
    for e in h.edges:
        for x, y in combinations(e, 2):
            pairs.add(frozenset((x, y)))
    return Hypergraph(h.vertices, pairs)


def closed_neighborhood(h: Hypergraph, x: Vertex) -> NeighborSet:
    _nonempty(h)
    h.require(x)
    return NeighborSet(x, h.closed(x))


def is_connected(h: Hypergraph) -> bool:
    _nonempty(h)
    start = h.vertices[0]
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for u in h.closed(v):
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return len(seen) == len(h.vertices)


def rank_antirank(h: Hypergraph) -> tuple[int, int]:
    """(max edge size, min edge size)."""
    _nonempty(h)
    if not h.edges:
        raise HypergraphError("rank is undefined for a hypergraph without edges")
    sizes = [len(e) for e in h.edges]
    return max(sizes), min(sizes)


def _delete(h: Hypergraph, x: Vertex, min_size: int) -> Hypergraph:
    _nonempty(h)
    h.require(x)
    edges = []
    for e in h.edges:
        if x not in e:
            edges.append(e)
        elif len(e) >= min_size:
            edges.append(e - {x})
    return Hypergraph([v for v in h.vertices if v != x], edges)


def dot_delete(h: Hypergraph, x: Vertex) -> Hypergraph:
    """Delete x, keeping f - {x} only for edges f through x with |f| >= 3."""
    return _delete(h, x, 3)


def weak_delete(h: Hypergraph, x: Vertex) -> Hypergraph:
    """Delete x, keeping every nonempty remnant f - {x} (size-1 remnants included)."""
    return _delete(h, x, 2)


def is_corner(h: Hypergraph, x: Vertex) -> Vertex | None:
    """Least u != x (vertex order) with N[x] ⊆ N[u], or None.

    Containment is non-strict, so the two ends of a single edge cover each other.
    """
    _nonempty(h)
    h.require(x)
    if len(h.vertices) < 2:
        raise HypergraphError("corners need at least two vertices")
    nx_ = h.closed(x)
    for u in h.vertices:
        if u != x and nx_ <= h.closed(u):
            return u
    return None
