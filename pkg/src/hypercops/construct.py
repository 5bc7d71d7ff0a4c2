"""Generators: basic graphs, complete multipartite K and L families, Cartesian
products, prisms, and hypertrees built on (or sampled with) a host tree."""

from __future__ import annotations

import enum
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from itertools import combinations, product

import networkx as nx
import numpy as np

from .core import Hypergraph, HypergraphError, Vertex, is_connected, rank_antirank


class ConstructionError(ValueError):
    pass


def _rng(seed) -> np.random.Generator:
    return seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)


# ---------------------------------------------------------------------------
# basic graphs


class Kind(enum.Enum):
    PATH = "path"
    CYCLE = "cycle"
    COMPLETE = "complete"
    HYPERCUBE = "hypercube"


def basic(kind: Kind | str, n: int) -> Hypergraph:
    kind = Kind(kind.lower()) if isinstance(kind, str) else kind
    if kind is Kind.HYPERCUBE:
        if n < 0:
            raise ConstructionError("hypercube dimension must be >= 0")
        if n == 0:
            return Hypergraph([0])
        k2 = basic(Kind.COMPLETE, 2)
        return k2 if n == 1 else cartesian_product([k2] * n)
    if n < 1:
        raise ConstructionError(f"{kind.value} needs n >= 1")
    vs = range(n)
    if kind is Kind.PATH:
        return Hypergraph(vs, [(i, i + 1) for i in range(n - 1)])
    if kind is Kind.CYCLE:
        if n < 3:
            raise ConstructionError("cycle needs n >= 3")
        return Hypergraph(vs, [(i, (i + 1) % n) for i in range(n)])
    return Hypergraph(vs, combinations(vs, 2))


# ---------------------------------------------------------------------------
# complete multipartite families


@dataclass(frozen=True)
class PartitionSpec:
    """Class sizes plus edge size; ``s`` set means the L family, unset the K family."""

    r: int
    parts: tuple[int, ...]
    s: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(self.parts))

    @property
    def family(self) -> str:
        return "K" if self.s is None else "L"

    def classes(self) -> list[list[int]]:
        out, start = [], 0
        for size in self.parts:
            out.append(list(range(start, start + size)))
            start += size
        return out

    def _validate_parts(self):
        p = self.parts
        if len(p) < 2:
            raise ConstructionError("need at least two classes")
        if any(x < 1 for x in p) or list(p) != sorted(p):
            raise ConstructionError("class sizes must be positive and nondecreasing")

    def validate_k(self):
        if self.s is not None:
            raise ConstructionError("K family takes no s parameter")
        self._validate_parts()
        if not len(self.parts) >= self.r >= 2:
            raise ConstructionError(f"K family needs t >= r >= 2, got t={len(self.parts)}, r={self.r}")

    def validate_l(self):
        if self.s is None:
            raise ConstructionError("L family needs s")
        self._validate_parts()
        t = len(self.parts)
        if not 2 <= self.s <= t < self.r:
            raise ConstructionError(f"L family needs 2 <= s <= t < r, got s={self.s}, t={t}, r={self.r}")
        if sum(self.parts) < self.r:
            raise ConstructionError(f"L family needs at least r={self.r} vertices, got {sum(self.parts)}")


def complete_multipartite(spec: PartitionSpec) -> Hypergraph:
    """All r-sets meeting every class at most once."""
    spec.validate_k()
    classes = spec.classes()
    edges = []
    for chosen in combinations(classes, spec.r):
        edges.extend(product(*chosen))
    return Hypergraph(range(sum(spec.parts)), edges)


def l_multipartite(spec: PartitionSpec) -> Hypergraph:
    """All r-sets meeting at least s classes."""
    spec.validate_l()
    cls_of = {v: i for i, c in enumerate(spec.classes()) for v in c}
    vs = range(sum(spec.parts))
    edges = [e for e in combinations(vs, spec.r) if len({cls_of[v] for v in e}) >= spec.s]
    return Hypergraph(vs, edges)


# ---------------------------------------------------------------------------
# products


def product_label(coords: Iterable[Vertex]) -> tuple:
    """Flattened product vertex label: nested product labels are spliced in."""
    out: list = []
    for c in coords:
        if isinstance(c, tuple):
            out.extend(c)
        else:
            out.append(c)
    return tuple(out)


def render_label(v: Vertex) -> str:
    if isinstance(v, tuple):
        return "(" + ",".join(render_label(x) for x in v) + ")"
    return str(v)


def cartesian_product(factors: Sequence[Hypergraph]) -> Hypergraph:
    """Product whose edges vary one coordinate along an edge of that factor."""
    if len(factors) < 2:
        raise ConstructionError("a product needs at least two factors")
    for f in factors:
        if not f.vertices:
            raise ConstructionError("empty factor")
    grid = list(product(*(f.vertices for f in factors)))
    edges = []
    for i, f in enumerate(factors):
        others = [g.vertices for j, g in enumerate(factors) if j != i]
        for e in f.edges:
            members = f.sort_vertices(e)
            for fixed in product(*others):
                edges.append([product_label(fixed[:i] + (x,) + fixed[i:]) for x in members])
    return Hypergraph([product_label(c) for c in grid], edges)


# ---------------------------------------------------------------------------
# prisms


@dataclass(frozen=True)
class PrismSpec:
    base: Hypergraph
    n: int
    r: int

    def validate(self):
        if self.n < 2:
            raise ConstructionError("a prism needs n >= 2 copies")
        if self.r < 2:
            raise ConstructionError("transitional edge size r must be >= 2")
        if not self.base.vertices or not is_connected(self.base):
            raise ConstructionError("prism base must be a connected hypergraph")
        rank, _ = rank_antirank(self.base)
        if 2 * rank < self.r:
            raise ConstructionError(f"base rank {rank} < r/2 = {self.r / 2}: no transitional edges")


def prism_label(v: Vertex, i: int) -> str:
    return f"{v}@{i}"


def prism(spec: PrismSpec) -> Hypergraph:
    """n labelled copies of the base joined by size-r transitional edges.

    An i-transitional edge pivoted at v^i is {v^i, v^(i+1)} plus r-2 fillers
    drawn from e^i ∪ e^(i+1) for a base edge e through v with 2|e| >= r.
    """
    spec.validate()
    base, n, r = spec.base, spec.n, spec.r
    verts = [prism_label(v, i) for i in range(1, n + 1) for v in base.vertices]
    edges: list[list[str]] = []
    for i in range(1, n + 1):
        edges.extend([prism_label(v, i) for v in e] for e in base.edges)
    for i in range(1, n):
        for v in base.vertices:
            for e in base.edges:
                if v not in e or 2 * len(e) < r:
                    continue
                rest = [u for u in base.sort_vertices(e) if u != v]
                pool = [prism_label(u, i) for u in rest] + [prism_label(u, i + 1) for u in rest]
                for fill in combinations(pool, r - 2):
                    edges.append([prism_label(v, i), prism_label(v, i + 1), *fill])
    return Hypergraph(verts, edges)


# ---------------------------------------------------------------------------
# trees and hypertrees


def validate_host_tree(host: Hypergraph) -> None:
    if not host.vertices:
        raise ConstructionError("host tree has no vertices")
    if not host.is_graph:
        raise ConstructionError("host tree must be a graph")
    if len(host.edges) != len(host.vertices) - 1 or not is_connected(host):
        raise ConstructionError("host is not a tree")


def _induces_subtree(host: Hypergraph, e: frozenset) -> bool:
    start = next(iter(e))
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for y in host.closed(x):
            if y in e and y not in seen:
                seen.add(y)
                stack.append(y)
    return seen == e


def hypertree_from_host(host: Hypergraph, edges: Iterable[Iterable[Vertex]]) -> Hypergraph:
    validate_host_tree(host)
    try:
        h = Hypergraph(host.vertices, edges)
    except HypergraphError as exc:
        raise ConstructionError(str(exc)) from None
    for e in h.edges:
        if not _induces_subtree(host, e):
            raise ConstructionError(f"edge {h.sort_vertices(e)} does not induce a subtree of the host")
    if not is_connected(h):
        raise ConstructionError("hypertree is disconnected")
    return h


def host_path(host: Hypergraph, u: Vertex, v: Vertex) -> list[Vertex]:
    """Unique host-tree path from u to v, both ends included."""
    parent = {u: None}
    stack = [u]
    while stack:
        x = stack.pop()
        if x == v:
            break
        for y in host.closed(x):
            if y not in parent:
                parent[y] = x
                stack.append(y)
    path = [v]
    while path[-1] != u:
        path.append(parent[path[-1]])
    return path[::-1]


def random_tree(n: int, seed=None) -> Hypergraph:
    """Uniform labelled tree on 0..n-1 from a random Prüfer sequence."""
    if n < 1:
        raise ConstructionError("a tree needs n >= 1")
    if n == 1:
        return Hypergraph([0])
    if n == 2:
        return Hypergraph([0, 1], [(0, 1)])
    rng = _rng(seed)
    t = nx.from_prufer_sequence([int(x) for x in rng.integers(n, size=n - 2)])
    return Hypergraph(range(n), [tuple(sorted(e)) for e in t.edges()])


def random_hypertree(n: int, max_edge: int, edge_count: int, seed=None) -> tuple[Hypergraph, Hypergraph]:
    """(hypertree, host tree). Edges are random connected subtrees of the host;
    host edges not covered by any of them are added as 2-edges."""
    if n < 1 or max_edge < 2 or edge_count < 0:
        raise ConstructionError("need n >= 1, max_edge >= 2, edge_count >= 0")
    rng = _rng(seed)
    host = random_tree(n, rng)
    if n == 1:
        return Hypergraph([0]), host
    edges: list[frozenset] = []
    for _ in range(edge_count):
        size = int(rng.integers(2, min(max_edge, n) + 1))
        grown = [int(rng.integers(n))]
        members = set(grown)
        while len(members) < size:
            frontier = sorted({y for x in members for y in host.closed(x)} - members)
            pick = frontier[int(rng.integers(len(frontier)))]
            members.add(pick)
        edges.append(frozenset(members))
    for uv in host.edges:
        if not any(uv <= e for e in edges):
            edges.append(uv)
    return hypertree_from_host(host, edges), host


def random_connected_hypergraph(n: int, max_rank: int, seed=None, edge_count: int | None = None) -> Hypergraph:
    """Random connected hypergraph on 0..n-1 with edge sizes in 2..max_rank.

    Sizes are biased towards 2 so that non-cop-win instances stay common.
    Components are joined by extra 2-edges between their least vertices.
    """
    if n < 1 or max_rank < 2:
        raise ConstructionError("need n >= 1 and max_rank >= 2")
    if n == 1:
        return Hypergraph([0])
    rng = _rng(seed)
    if edge_count is None:
        edge_count = int(rng.integers(n - 1, 2 * n + 1))
    sizes = list(range(2, min(max_rank, n) + 1))
    weights = np.array([0.6 * 0.4 ** i for i in range(len(sizes))])
    weights /= weights.sum()
    edges = []
    for _ in range(edge_count):
        size = int(rng.choice(sizes, p=weights))
        edges.append(tuple(int(x) for x in rng.choice(n, size=size, replace=False)))
    h = Hypergraph(range(n), edges)
    comps = _components(h)
    for a, b in zip(comps, comps[1:]):
        edges.append((min(a), min(b)))
    return Hypergraph(range(n), edges)


def _components(h: Hypergraph) -> list[set]:
    seen: set = set()
    comps = []
    for v in h.vertices:
        if v in seen:
            continue
        comp = {v}
        stack = [v]
        while stack:
            x = stack.pop()
            for y in h.closed(x):
                if y not in comp:
                    comp.add(y)
                    stack.append(y)
        seen |= comp
        comps.append(comp)
    return comps
