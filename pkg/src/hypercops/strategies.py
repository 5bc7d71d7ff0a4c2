"""Scripted cop and robber strategies for hypertrees, multipartite hypergraphs,
tree products with an active robber, general products, and prisms.

Every strategy here is stateless: moves depend only on the current positions.
"""

from __future__ import annotations

from collections import deque
from itertools import product

from .construct import (
    ConstructionError,
    PartitionSpec,
    PrismSpec,
    cartesian_product,
    complete_multipartite,
    host_path,
    hypertree_from_host,
    l_multipartite,
    prism,
    prism_label,
    product_label,
    validate_host_tree,
)
from .core import Hypergraph, Vertex, is_connected, rank_antirank
from .solver import CopStrategy, RobberStrategy, StrategyError, Variant, is_k_cop_win


def _coordinates(factors: list[Hypergraph]) -> dict[Vertex, tuple]:
    return {product_label(c): c for c in product(*(f.vertices for f in factors))}


def _bfs(h: Hypergraph, src: Vertex) -> dict[Vertex, int]:
    d = {src: 0}
    q = deque([src])
    while q:
        x = q.popleft()
        for y in h.sort_vertices(h.closed(x)):
            if y not in d:
                d[y] = d[x] + 1
                q.append(y)
    return d


# ---------------------------------------------------------------------------
# hypertrees


class HypertreeCop(CopStrategy):
    """One cop on a hypertree, steered by a host tree.

    Opens on a cut-vertex of the host. Each turn she walks the host path towards
    the robber as far as one hypergraph edge allows; the host component that
    still contains the robber shrinks every round.
    """

    k = 1

    def __init__(self, t: Hypergraph, host: Hypergraph):
        try:
            validate_host_tree(host)
            if set(host.vertices) != set(t.vertices):
                raise ConstructionError("host tree and hypertree have different vertex sets")
            hypertree_from_host(host, t.edges)
        except ConstructionError as exc:
            raise StrategyError(f"host tree does not certify the hypertree: {exc}") from None
        self.t, self.host = t, host

    def place(self):
        if len(self.t.vertices) <= 2:
            return (self.t.vertices[0],)
        cut = [v for v in self.t.vertices if len(self.host.closed(v)) > 2]
        return (cut[0],)

    def move(self, cops, robber):
        u = cops[0]
        reach = self.t.closed(u)
        path = host_path(self.host, u, robber)
        # vertices of the path adjacent to u form a prefix
        step = u
        for x in path[1:]:
            if x not in reach:
                break
            step = x
        return (step,)


def territory(host: Hypergraph, cop: Vertex, robber: Vertex) -> frozenset:
    """Vertices of the component of host - cop that contains the robber."""
    if cop == robber:
        return frozenset()
    seen = {robber}
    stack = [robber]
    while stack:
        x = stack.pop()
        for y in host.closed(x):
            if y != cop and y not in seen:
                seen.add(y)
                stack.append(y)
    return frozenset(seen)


def hypertree_cop_strategy(t: Hypergraph, host: Hypergraph) -> HypertreeCop:
    return HypertreeCop(t, host)


# ---------------------------------------------------------------------------
# products of two trees, active robber


class TreeProductCop(CopStrategy):
    """Single cop on T1 □ T2 against a robber who must move every turn.

    With d1, d2 the factor distances to the robber: pass when d1 + d2 is even,
    otherwise step to reduce max(d1, d2), reducing d1 on ties.
    """

    k = 1
    required_variant = Variant.ACTIVE_ROBBER

    def __init__(self, t1: Hypergraph, t2: Hypergraph):
        for t in (t1, t2):
            try:
                validate_host_tree(t)
            except ConstructionError as exc:
                raise StrategyError(f"factor is not a tree: {exc}") from None
            if len(t.vertices) < 2:
                raise StrategyError("factors must be non-trivial trees")
        self.t1, self.t2 = t1, t2
        self.graph = cartesian_product([t1, t2])
        self.coord = _coordinates([t1, t2])
        self._dist = ({v: _bfs(t1, v) for v in t1.vertices}, {v: _bfs(t2, v) for v in t2.vertices})

    def distances(self, cop: Vertex, robber: Vertex) -> tuple[int, int]:
        (a, b), (x, y) = self.coord[cop], self.coord[robber]
        return self._dist[0][a][x], self._dist[1][b][y]

    def place(self):
        return (self.graph.vertices[0],)

    def move(self, cops, robber):
        c = cops[0]
        d1, d2 = self.distances(c, robber)
        if (d1 + d2) % 2 == 0:
            return (c,)
        (a, b), (x, y) = self.coord[c], self.coord[robber]
        if d1 >= d2:
            a = host_path(self.t1, a, x)[1]
        else:
            b = host_path(self.t2, b, y)[1]
        return (product_label((a, b)),)


def mm_product_cop_strategy(t1: Hypergraph, t2: Hypergraph,
                            variant: Variant = Variant.ACTIVE_ROBBER) -> TreeProductCop:
    if variant is not Variant.ACTIVE_ROBBER:
        raise StrategyError("the tree-product cop strategy only wins against an active robber")
    return TreeProductCop(t1, t2)


# ---------------------------------------------------------------------------
# prisms


def _check_prism_params(h: Hypergraph, n: int, r: int) -> None:
    if r < 3:
        raise StrategyError("prism strategies need r >= 3")
    if n < 2:
        raise StrategyError("prism needs n >= 2")
    if not h.edges or not is_connected(h):
        raise StrategyError("prism base must be connected with at least one edge")
    if 2 * rank_antirank(h)[1] < r:
        raise StrategyError("prism strategies need base anti-rank >= r/2")


class PrismCop(CopStrategy):
    """c(H) cops on P(H, n, r).

    Phase 1: all cops stay in copy 1 and run ``inner`` against the robber's
    copy-1 clone. Phase 2: a cop sitting on (or next to) the clone of the robber's
    base vertex in a lower copy climbs one copy per turn through a transitional
    edge, landing on the robber's clone each time, until the robber is caught.
    """

    def __init__(self, h: Hypergraph, n: int, r: int, inner: CopStrategy):
        _check_prism_params(h, n, r)
        self.h, self.n, self.r, self.inner = h, n, r, inner
        self.k = inner.k
        self.graph = prism(PrismSpec(h, n, r))
        self.coord = {prism_label(v, i): (v, i) for i in range(1, n + 1) for v in h.vertices}

    def place(self):
        return tuple(prism_label(v, 1) for v in self.inner.place())

    def tracker(self, cops, robber) -> int | None:
        """Index of the cop that is one hypergraph step from the robber's clone in a lower copy."""
        w, j = self.coord[robber]
        best = None
        for idx, c in enumerate(cops):
            v, i = self.coord[c]
            if i < j and w in self.h.closed(v) and (best is None or i > self.coord[cops[best]][1]):
                best = idx
        return best

    def move(self, cops, robber):
        new = list(cops)
        for idx, c in enumerate(cops):
            if robber in self.graph.closed(c):
                new[idx] = robber
                return tuple(new)
        idx = self.tracker(cops, robber)
        w, _ = self.coord[robber]
        if idx is not None:
            _, i = self.coord[cops[idx]]
            new[idx] = prism_label(w, i + 1)
            return tuple(new)
        base = tuple(self.coord[c][0] for c in cops)
        return tuple(prism_label(v, 1) for v in self.inner.move(base, w))


def prism_cop_strategy(h: Hypergraph, n: int, r: int, inner: CopStrategy) -> PrismCop:
    return PrismCop(h, n, r, inner)


class PrismEvader(RobberStrategy):
    """Fewer than c(H) cops on P(H, n, r): live in copy 1 and dodge the cops' clones there."""

    required_variant = Variant.STANDARD

    def __init__(self, h: Hypergraph, n: int, r: int, inner: RobberStrategy):
        _check_prism_params(h, n, r)
        if is_k_cop_win(h, 1):
            raise StrategyError("the prism evader needs a base with cop number >= 2")
        table = getattr(inner, "table", None)
        if table is not None and table.is_cop_win:
            raise StrategyError(f"{table.k} cops already win on the base; nothing to evade")
        self.h, self.n, self.r, self.inner = h, n, r, inner
        self.max_cops = table.k if table is not None else None
        self.graph = prism(PrismSpec(h, n, r))
        self.coord = {prism_label(v, i): (v, i) for i in range(1, n + 1) for v in h.vertices}

    def _clones(self, cops):
        base = [self.coord[c][0] for c in cops]
        if self.max_cops is not None:
            if len(base) > self.max_cops:
                raise StrategyError(f"evader handles at most {self.max_cops} cop(s), got {len(base)}")
            # extra clones on an occupied vertex only make evasion harder
            base += [base[0]] * (self.max_cops - len(base))
        return tuple(base)

    def place(self, cops):
        return prism_label(self.inner.place(self._clones(cops)), 1)

    def move(self, cops, robber):
        w, _ = self.coord[robber]
        return prism_label(self.inner.move(self._clones(cops), w), 1)


def prism_robber_evader(h: Hypergraph, n: int, r: int, inner_evader: RobberStrategy) -> PrismEvader:
    return PrismEvader(h, n, r, inner_evader)


# ---------------------------------------------------------------------------
# complete multipartite families


def multipartite_hypergraph(spec: PartitionSpec) -> Hypergraph:
    if not isinstance(spec, PartitionSpec):
        raise StrategyError(f"expected a PartitionSpec, got {type(spec).__name__}")
    try:
        return complete_multipartite(spec) if spec.family == "K" else l_multipartite(spec)
    except ConstructionError as exc:
        raise StrategyError(str(exc)) from None


class MultipartiteCop(CopStrategy):
    """Cops whose closed neighbourhoods cover everything from the start; capture on move one."""

    def __init__(self, spec: PartitionSpec):
        self.graph = multipartite_hypergraph(spec)
        classes = spec.classes()
        if spec.family == "L":
            self.opening = (classes[-1][0],)
        elif spec.parts[0] == 1:
            self.opening = (classes[0][0],)
        else:
            self.opening = (classes[0][0], classes[1][0])
        self.k = len(self.opening)

    def place(self):
        return self.opening

    def move(self, cops, robber):
        new = list(cops)
        for idx, c in enumerate(cops):
            if robber in self.graph.closed(c):
                new[idx] = robber
                break
        return tuple(new)


def multipartite_cop_strategy(spec: PartitionSpec) -> MultipartiteCop:
    return MultipartiteCop(spec)


class MultipartiteEvader(RobberStrategy):
    """Against one cop on K with n1 >= 2: always finish in the cop's class, off the cop."""

    required_variant = Variant.STANDARD

    def __init__(self, spec: PartitionSpec):
        if not isinstance(spec, PartitionSpec) or spec.family != "K":
            raise StrategyError("the multipartite evader needs a K-family descriptor")
        self.graph = multipartite_hypergraph(spec)
        if spec.parts[0] < 2:
            raise StrategyError("with a singleton class one cop wins; no evader exists")
        self.classes = spec.classes()
        self.class_of = {v: i for i, c in enumerate(self.classes) for v in c}

    def _target(self, cops, robber):
        if len(cops) != 1:
            raise StrategyError(f"the multipartite evader only faces one cop, got {len(cops)}")
        c = cops[0]
        cls = self.class_of[c]
        if robber is not None and robber != c and self.class_of[robber] == cls:
            return robber
        return next(v for v in self.classes[cls] if v != c)

    def place(self, cops):
        return self._target(cops, None)

    def move(self, cops, robber):
        return self._target(cops, robber)


def multipartite_robber_evader(spec: PartitionSpec) -> MultipartiteEvader:
    return MultipartiteEvader(spec)


# ---------------------------------------------------------------------------
# general two-factor products


class ProductEvader(RobberStrategy):
    """Against one cop on G □ H: keep both coordinates different from the cop's."""

    required_variant = Variant.STANDARD

    def __init__(self, g: Hypergraph, h: Hypergraph):
        for f in (g, h):
            if len(f.vertices) < 2 or not is_connected(f):
                raise StrategyError("product evader needs connected factors with >= 2 vertices")
        self.g, self.h = g, h
        self.graph = cartesian_product([g, h])
        self.coord = _coordinates([g, h])

    def _one_cop(self, cops):
        if len(cops) != 1:
            raise StrategyError(f"the product evader only faces one cop, got {len(cops)}")
        return self.coord[cops[0]]

    def place(self, cops):
        a, b = self._one_cop(cops)
        for v in self.graph.vertices:
            x, y = self.coord[v]
            if x != a and y != b:
                return v
        raise AssertionError("unreachable: both factors have two vertices")

    def move(self, cops, robber):
        a, b = self._one_cop(cops)
        x, y = self.coord[robber]
        if x == a:
            x = next(u for u in self.g.sort_vertices(self.g.closed(x)) if u != x)
        elif y == b:
            y = next(u for u in self.h.sort_vertices(self.h.closed(y)) if u != y)
        return product_label((x, y))


def product_robber_evader(g: Hypergraph, h: Hypergraph) -> ProductEvader:
    return ProductEvader(g, h)


__all__ = [
    "HypertreeCop", "MultipartiteCop", "MultipartiteEvader", "PrismCop",
    "PrismEvader", "ProductEvader", "TreeProductCop", "hypertree_cop_strategy",
    "mm_product_cop_strategy", "multipartite_cop_strategy", "multipartite_hypergraph",
    "multipartite_robber_evader", "prism_cop_strategy", "prism_robber_evader",
    "product_robber_evader", "territory",
]
