"""Verification suites and the report they produce.

Each check is data: a family expression (see ``build_family``), what to
compute, the expected value and a traceability anchor. Pool-based checks
(random instances) are named functions taking a seed.
"""

from __future__ import annotations

import json
import math
import time
from collections.abc import Callable
from dataclasses import asdict, dataclass, field
from itertools import product

import networkx as nx
import numpy as np

from . import construct as C
from .core import Hypergraph, dot_delete, is_connected, is_corner, two_section, weak_delete
from .dismantle import dismantling_order, find_corner, verify_certificate
from .solver import (
    Side,
    Variant,
    cop_number,
    evader_survives,
    extract_strategy,
    is_k_cop_win,
    play_match,
    solve,
    state_count,
)
from .strategies import (
    hypertree_cop_strategy,
    mm_product_cop_strategy,
    multipartite_cop_strategy,
    multipartite_robber_evader,
    prism_cop_strategy,
    prism_robber_evader,
    product_robber_evader,
)

SUITES = ("ALL", "CHARACTERISATION", "HYPERTREE", "MULTIPARTITE", "PRODUCTS", "PRISM")


# ---------------------------------------------------------------------------
# family expressions


class FamilyError(ValueError):
    pass


def _split_top(s: str, sep: str = ";") -> list[str]:
    out, depth, cur = [], 0, []
    for ch in s:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == sep and depth == 0:
            out.append("".join(cur).strip())
            cur = []
        else:
            cur.append(ch)
    out.append("".join(cur).strip())
    return out


def _ints(s: str) -> tuple[int, ...]:
    return tuple(int(x) for x in s.split(",") if x)


def build_family(expr: str, seed=None) -> Hypergraph:
    """Hypergraph from a short expression.

    ``path N``, ``cycle N``, ``complete N``, ``hypercube D``, ``edge a,b,c``,
    ``K r n1,n2,...``, ``L r s n1,n2,...``, ``hypertree n max_edge edge_count``,
    ``random n max_rank``, ``product(E1; E2; ...)``, ``prism(E; n; r)``.
    """
    expr = expr.strip()
    head = expr.split("(", 1)[0].strip().lower()
    if "(" in expr and head in ("product", "prism"):
        if not expr.endswith(")"):
            raise FamilyError(f"unbalanced expression {expr!r}")
        args = _split_top(expr[len(head):].strip()[1:-1])
        if head == "product":
            return C.cartesian_product([build_family(a, seed) for a in args])
        if len(args) != 3:
            raise FamilyError("prism(E; n; r) takes three arguments")
        return C.prism(C.PrismSpec(build_family(args[0], seed), int(args[1]), int(args[2])))
    words = expr.split()
    if not words:
        raise FamilyError("empty family expression")
    name, params = words[0], words[1:]
    try:
        low = name.lower()
        if low in ("path", "cycle", "complete", "hypercube"):
            (n,) = params
            return C.basic(low, int(n))
        if low == "edge":
            (members,) = params
            return Hypergraph.from_edges([members.split(",")])
        if name == "K":
            r, parts = params
            return C.complete_multipartite(C.PartitionSpec(int(r), _ints(parts)))
        if name == "L":
            r, s, parts = params
            return C.l_multipartite(C.PartitionSpec(int(r), _ints(parts), int(s)))
        if low == "hypertree":
            n, max_edge, count = map(int, params)
            return C.random_hypertree(n, max_edge, count, seed)[0]
        if low == "random":
            n, max_rank = map(int, params)
            return C.random_connected_hypergraph(n, max_rank, seed)
    except ValueError as exc:
        raise FamilyError(f"bad parameters for {name!r}: {exc}") from None
    raise FamilyError(f"unknown family {name!r}")


def partition_from_expr(expr: str) -> C.PartitionSpec:
    words = expr.split()
    if words[0] == "K" and len(words) == 3:
        return C.PartitionSpec(int(words[1]), _ints(words[2]))
    if words[0] == "L" and len(words) == 4:
        return C.PartitionSpec(int(words[1]), _ints(words[3]), int(words[2]))
    raise FamilyError(f"not a multipartite expression: {expr!r}")


# ---------------------------------------------------------------------------
# inequality used in the product lower bound


def product_inequality_sides(tree_orders, hg_orders) -> tuple[int, int]:
    p, q = len(tree_orders), len(hg_orders)
    if q < 1 or (p, q) == (0, 1):
        raise ValueError("need q >= 1 and (p, q) != (0, 1)")
    if any(o < 2 for o in (*tree_orders, *hg_orders)):
        raise ValueError("all factor orders must be >= 2")
    cops = math.ceil(p / 2) + q - 1
    reach = 1 + sum(o - 1 for o in tree_orders) + sum(o - 1 for o in hg_orders)
    return cops * reach, math.prod(tree_orders) * math.prod(hg_orders)


def check_inequality_2(tree_orders, hg_orders) -> bool:
    """Do ceil(p/2)+q-1 cops' closed neighbourhoods miss some vertex of the product?"""
    lhs, rhs = product_inequality_sides(tree_orders, hg_orders)
    return lhs < rhs


def inequality_grid(hg_min_order: int = 2):
    for p in range(5):
        for q in range(1, 4):
            if (p, q) == (0, 1):
                continue
            for t in product((2, 3, 4), repeat=p):
                for hs in product(range(hg_min_order, 5), repeat=q):
                    yield t, hs


# ---------------------------------------------------------------------------
# instance pools


def hypergraph_pool(seed: int, count: int = 300, max_n: int = 8, max_rank: int = 4) -> list[Hypergraph]:
    rng = np.random.default_rng([seed, 0])
    return [C.random_connected_hypergraph(int(rng.integers(2, max_n + 1)), max_rank, rng)
            for _ in range(count)]


def hypertree_pool(seed: int, count: int = 200, max_n: int = 10) -> list[tuple[Hypergraph, Hypergraph]]:
    rng = np.random.default_rng([seed, 1])
    out = []
    for _ in range(count):
        n = int(rng.integers(1, max_n + 1))
        out.append(C.random_hypertree(n, int(rng.integers(2, 6)), int(rng.integers(0, n + 1)), rng))
    return out


def small_connected_graphs(max_n: int = 7) -> list[Hypergraph]:
    """Every connected graph on 1..max_n vertices, up to isomorphism."""
    out = []
    for g in nx.graph_atlas_g():
        n = g.number_of_nodes()
        if 1 <= n <= max_n and nx.is_connected(g):
            out.append(Hypergraph(range(n), g.edges()))
    return out


def trees_up_to(max_n: int) -> list[Hypergraph]:
    out = []
    for n in range(2, max_n + 1):
        for t in nx.nonisomorphic_trees(n):
            out.append(Hypergraph(range(n), sorted(tuple(sorted(e)) for e in t.edges())))
    return out


# ---------------------------------------------------------------------------
# outcomes and reports


@dataclass
class Outcome:
    expected: object
    computed: object
    passed: bool


@dataclass
class CheckRecord:
    name: str
    anchor: str
    expected: object
    computed: object
    status: str  # PASS | FAIL | SKIPPED
    elapsed: float


@dataclass
class VerificationReport:
    suite: str
    seed: int
    budget: float | None
    records: list[CheckRecord] = field(default_factory=list)

    @property
    def summary(self) -> dict[str, int]:
        counts = {"PASS": 0, "FAIL": 0, "SKIPPED": 0}
        for r in self.records:
            counts[r.status] += 1
        counts["total"] = len(self.records)
        return counts

    @property
    def passed(self) -> bool:
        """Skipped checks count against the report: nothing passes unverified."""
        s = self.summary
        return s["FAIL"] == 0 and s["SKIPPED"] == 0

    def to_json(self, timings: bool = True) -> dict:
        recs = [asdict(r) for r in self.records]
        if not timings:
            for r in recs:
                r.pop("elapsed")
        return {"suite": self.suite, "seed": self.seed, "budget": self.budget,
                "records": recs, "summary": self.summary}

    def to_markdown(self) -> str:
        lines = [f"# Verification report: {self.suite} (seed {self.seed})", "",
                 "| check | anchor | expected | computed | status | s |",
                 "|---|---|---|---|---|---|"]
        for r in self.records:
            lines.append(f"| {r.name} | {r.anchor} | {_short(r.expected)} | {_short(r.computed)} "
                         f"| {r.status} | {r.elapsed:.2f} |")
        s = self.summary
        lines += ["", f"{s['PASS']} passed, {s['FAIL']} failed, {s['SKIPPED']} skipped of {s['total']}"]
        return "\n".join(lines) + "\n"


def _short(x) -> str:
    text = json.dumps(x, default=str)
    return text if len(text) <= 60 else text[:57] + "..."


@dataclass(frozen=True)
class Check:
    name: str
    anchor: str
    suite: str
    run: Callable[[int], Outcome]


# ---------------------------------------------------------------------------
# data-driven checks

COP_NUMBERS = [
    # (suite, family expression, expected cop number, anchor)
    ("MULTIPARTITE", "K 3 1,2,2", 1, "Prop 3.4(a): c=1 if n1=1"),
    ("MULTIPARTITE", "K 2 2,2", 2, "Prop 3.4(a): c=2 if n1>=2"),
    ("MULTIPARTITE", "K 3 2,2,2", 2, "Prop 3.4(a): c=2 if n1>=2"),
    ("MULTIPARTITE", "L 4 2 1,1,2", 1, "Prop 3.4(b): c(L)=1"),
    ("PRODUCTS", "product(path 2; path 2)", 2, "Thm 4.1(b): ceil((d+1)/2), d=2"),
    ("PRODUCTS", "product(path 3; path 3)", 2, "Thm 4.1(b): ceil((d+1)/2), d=2"),
    ("PRODUCTS", "product(path 2; path 2; path 2)", 2, "Thm 4.1(b): ceil((d+1)/2), d=3"),
    ("PRODUCTS", "product(edge a,b,c; edge x,y,z)", 2, "Cor 4.3(a): d=2, anti-rank 3"),
    ("PRODUCTS", "product(complete 2; complete 3)", 2, "Cor 4.3(b): ceil(p/2)+q, p=1 q=1"),
    ("PRODUCTS", "product(complete 3; complete 3)", 2, "Cor 4.3(b): ceil(p/2)+q, p=0 q=2"),
    ("PRODUCTS", "product(hypercube 2; complete 3)", 2, "Cor 4.3(b): ceil(p/2)+q, p=2 q=1"),
    ("PRISM", "prism(edge a,b,c; 2; 3)", 1, "Thm 4.6: c(P(H,n,r))=c(H)"),
    ("PRISM", "prism(cycle 4; 2; 3)", 2, "Thm 4.6: c(P(H,n,r))=c(H)"),
    ("PRISM", "prism(edge a,b,c; 2; 2)", 2, "Sec 4 closing: c(P(H,n,2))=2=c(H)+1"),
    ("PRISM", "product(cycle 4; path 2)", 2, "Sec 4 closing: c(C_l □ P_n)=2"),
]

EVADERS = [
    # (suite, kind, arguments, rounds, anchor)
    ("MULTIPARTITE", "multipartite", "K 2 2,2", 100, "Prop 3.4(a): robber stays in the cop's class"),
    ("MULTIPARTITE", "multipartite", "K 3 2,2,2", 100, "Prop 3.4(a): robber stays in the cop's class"),
    ("PRODUCTS", "product", "edge a,b,c; edge x,y,z", 100, "Thm 4.2(a): c(G□H) >= 2"),
    ("PRODUCTS", "product", "complete 2; complete 3", 100, "Thm 4.2(a): c(G□H) >= 2"),
    ("PRODUCTS", "product", "complete 3; complete 3", 100, "Thm 4.2(a): c(G□H) >= 2"),
    ("PRODUCTS", "product", "hypercube 2; complete 3", 100, "Thm 4.2(a): c(G□H) >= 2"),
    ("PRISM", "prism", "cycle 4; 2; 3", 100, "Thm 4.6: c(H)-1 cops cannot capture"),
]

COP_STRATEGY_CAPTURES = [
    ("MULTIPARTITE", "multipartite", "K 3 1,2,2", "Prop 3.4(a): N[u]=V for u in V1"),
    ("MULTIPARTITE", "multipartite", "K 2 2,2", "Prop 3.4(a): N[u] ∪ N[v] = V"),
    ("MULTIPARTITE", "multipartite", "L 4 2 1,1,2", "Prop 3.4(b): N[u]=V for u in V_t"),
    ("PRISM", "prism", "edge a,b,c; 2; 3", "Thm 4.6: c(H) cops suffice"),
    ("PRISM", "prism", "cycle 4; 2; 3", "Thm 4.6: c(H) cops suffice"),
]


def _cop_number_check(expr: str, expected: int) -> Callable[[int], Outcome]:
    def run(seed: int) -> Outcome:
        got = cop_number(build_family(expr), max_k=expected + 1)
        return Outcome(expected, got, got == expected)
    return run


def build_evader(kind: str, args: str):
    """(game hypergraph, robber strategy, cops it faces)."""
    parts = _split_top(args)
    if kind == "multipartite":
        spec = partition_from_expr(args)
        ev = multipartite_robber_evader(spec)
        return ev.graph, ev, 1
    if kind == "product":
        g, h = (build_family(a) for a in parts)
        ev = product_robber_evader(g, h)
        return ev.graph, ev, 1
    if kind == "prism":
        base, n, r = build_family(parts[0]), int(parts[1]), int(parts[2])
        k = cop_number(base) - 1
        ev = prism_robber_evader(base, n, r, extract_strategy(solve(base, k), Side.ROBBER))
        return ev.graph, ev, k
    raise FamilyError(f"unknown evader kind {kind!r}")


def _evader_check(kind: str, args: str, rounds: int) -> Callable[[int], Outcome]:
    def run(seed: int) -> Outcome:
        g, ev, k = build_evader(kind, args)
        cop = extract_strategy(solve(g, k), Side.COP, strict=False)
        trace = play_match(g, k, cop, ev, rounds)
        proof = evader_survives(g, k, ev)
        computed = {"captured_vs_optimal": trace.captured, "rounds": trace.rounds_played,
                    "safe_vs_all_cops": proof}
        return Outcome({"captured_vs_optimal": False, "rounds": rounds, "safe_vs_all_cops": True},
                       computed, not trace.captured and trace.rounds_played == rounds and proof)
    return run


def build_cop_strategy(kind: str, args: str):
    parts = _split_top(args)
    if kind == "multipartite":
        cop = multipartite_cop_strategy(partition_from_expr(args))
        return cop.graph, cop
    if kind == "prism":
        base, n, r = build_family(parts[0]), int(parts[1]), int(parts[2])
        inner = extract_strategy(solve(base, cop_number(base)), Side.COP)
        cop = prism_cop_strategy(base, n, r, inner)
        return cop.graph, cop
    raise FamilyError(f"unknown cop strategy kind {kind!r}")


def _cop_capture_check(kind: str, args: str) -> Callable[[int], Outcome]:
    def run(seed: int) -> Outcome:
        g, cop = build_cop_strategy(kind, args)
        robber = extract_strategy(solve(g, cop.k), Side.ROBBER)
        limit = state_count(g, cop.k)
        trace = play_match(g, cop.k, cop, robber, limit)
        first_move = kind == "multipartite"
        ok = trace.captured and (trace.rounds_played <= 1 if first_move else True)
        return Outcome({"captured": True, **({"rounds_at_most": 1} if first_move else {})},
                       {"captured": trace.captured, "rounds": trace.rounds_played}, ok)
    return run


# ---------------------------------------------------------------------------
# pool checks


def check_characterisation(seed: int) -> Outcome:
    """Dismantlable ⇔ cop-win ⇔ 2-section dismantlable ⇔ 2-section cop-win."""
    graphs = small_connected_graphs(7)
    pool = hypergraph_pool(seed)
    mismatches = []
    cop_win = 0
    for label, h in [(f"graph{i}", g) for i, g in enumerate(graphs)] + \
                    [(f"hyper{i}", h) for i, h in enumerate(pool)]:
        g2 = two_section(h)
        cert = dismantling_order(h)
        facts = (cert is not None, is_k_cop_win(h, 1),
                 dismantling_order(g2) is not None, is_k_cop_win(g2, 1))
        if cert is not None and not verify_certificate(h, cert):
            mismatches.append((label, "certificate rejected"))
        if len(set(facts)) != 1:
            mismatches.append((label, facts))
        cop_win += facts[0]
    computed = {"graphs": len(graphs), "hypergraphs": len(pool), "cop_win": cop_win,
                "mismatches": len(mismatches), "first": mismatches[:3]}
    return Outcome({"mismatches": 0}, computed, not mismatches)


def check_two_section_cop_number(seed: int) -> Outcome:
    pool = hypergraph_pool(seed)
    bad = []
    hist: dict[str, int] = {}
    for i, h in enumerate(pool):
        a, b = cop_number(h, 3), cop_number(two_section(h), 3)
        hist[str(a)] = hist.get(str(a), 0) + 1
        if a != b:
            bad.append((i, a, b))
    return Outcome({"mismatches": 0}, {"mismatches": len(bad), "cop_numbers": hist, "first": bad[:3]},
                   not bad)


def check_hypertrees(seed: int) -> Outcome:
    bad = []
    for i, (t, host) in enumerate(hypertree_pool(seed)):
        table = solve(t, 1)
        if not table.is_cop_win:
            bad.append((i, "not cop-win"))
            continue
        n = len(t.vertices)
        trace = play_match(t, 1, hypertree_cop_strategy(t, host), extract_strategy(table, Side.ROBBER), n)
        if not trace.captured or trace.rounds_played > n:
            bad.append((i, "strategy failed", trace.rounds_played))
    return Outcome({"failures": 0}, {"instances": 200, "failures": len(bad), "first": bad[:3]}, not bad)


def check_inequality_grid(seed: int) -> Outcome:
    failing = [(t, hs) for t, hs in inequality_grid() if not check_inequality_2(t, hs)]
    total = sum(1 for _ in inequality_grid())
    return Outcome({"false_cases": 0}, {"cases": total, "false_cases": len(failing), "first": failing[:3]},
                   not failing)


def check_inequality_min_degree(seed: int) -> Outcome:
    """Same grid but hypergraph factors of order >= 3 (min degree 2 in the 2-section)."""
    failing = [(t, hs) for t, hs in inequality_grid(3) if not check_inequality_2(t, hs)]
    return Outcome({"false_cases": 0}, {"false_cases": len(failing), "first": failing[:3]}, not failing)


def check_active_tree_products(seed: int) -> Outcome:
    trees = trees_up_to(5)
    bad = []
    pairs = 0
    for t1, t2 in product(trees, repeat=2):
        pairs += 1
        cop = mm_product_cop_strategy(t1, t2)
        g = cop.graph
        table = solve(g, 1, Variant.ACTIVE_ROBBER)
        robber = extract_strategy(table, Side.ROBBER)
        trace = play_match(g, 1, cop, robber, state_count(g, 1), Variant.ACTIVE_ROBBER)
        if not trace.captured:
            bad.append((len(t1), len(t2), t1.edges, t2.edges))
    return Outcome({"uncaptured": 0}, {"pairs": pairs, "uncaptured": len(bad)}, not bad)


def structural_violations(pool: list[Hypergraph]) -> dict[str, int]:
    counts = {"corner_deletion_disconnects": 0, "corner_differs_in_two_section": 0, "deletion_two_section": 0, "cop_win_without_corner": 0, "corner_deletion_changes_cop_win": 0,
              "weak_delete_2section": 0, "weak_dismantle": 0}
    for h in pool:
        g2 = two_section(h)
        win = is_k_cop_win(h, 1)
        if win and len(h.vertices) >= 2 and find_corner(h) is None:
            counts["cop_win_without_corner"] += 1
        if len(h.vertices) < 2:
            continue
        for x in h.vertices:
            cov = is_corner(h, x)
            if (cov is None) != (is_corner(g2, x) is None):
                counts["corner_differs_in_two_section"] += 1
            graph_minus = Hypergraph([v for v in h.vertices if v != x], [e for e in g2.edges if x not in e])
            if two_section(dot_delete(h, x)) != graph_minus:
                counts["deletion_two_section"] += 1
            if two_section(weak_delete(h, x)) != graph_minus:
                counts["weak_delete_2section"] += 1
            if cov is not None:
                rest = dot_delete(h, x)
                if not is_connected(rest):
                    counts["corner_deletion_disconnects"] += 1
                elif win != is_k_cop_win(rest, 1):
                    counts["corner_deletion_changes_cop_win"] += 1
        if weak_dismantlable(h) != win:
            counts["weak_dismantle"] += 1
    return counts


def weak_dismantlable(h: Hypergraph) -> bool:
    cur = h
    while len(cur.vertices) > 1:
        found = find_corner(cur)
        if found is None:
            return False
        cur = weak_delete(cur, found[0])
    return True


def check_deletion_structure(seed: int) -> Outcome:
    counts = structural_violations(hypergraph_pool(seed))
    return Outcome({k: 0 for k in counts}, counts, not any(counts.values()))


def host_path_violations(t: Hypergraph, host: Hypergraph) -> int:
    bad = 0
    for e in t.edges:
        for u in e:
            for v in e:
                if not set(C.host_path(host, u, v)) <= e:
                    bad += 1
    for uv in host.edges:
        if not any(uv <= e for e in t.edges):
            bad += 1
    return bad


def check_host_tree_paths(seed: int) -> Outcome:
    bad = sum(host_path_violations(t, host) for t, host in hypertree_pool(seed))
    return Outcome({"violations": 0}, {"violations": bad}, bad == 0)


def product_pairs(seed: int, count: int = 50, max_n: int = 5) -> list[tuple[Hypergraph, Hypergraph]]:
    rng = np.random.default_rng([seed, 2])
    out = []
    for _ in range(count):
        g = C.random_connected_hypergraph(int(rng.integers(1, max_n + 1)), 3, rng)
        h = C.random_connected_hypergraph(int(rng.integers(1, max_n + 1)), 3, rng)
        out.append((g, h))
    return out


def check_product_two_section(seed: int) -> Outcome:
    bad = 0
    for g, h in product_pairs(seed):
        if two_section(C.cartesian_product([g, h])) != C.cartesian_product([two_section(g), two_section(h)]):
            bad += 1
    return Outcome({"violations": 0}, {"pairs": 50, "violations": bad}, bad == 0)


# ---------------------------------------------------------------------------
# registry


def all_checks() -> list[Check]:
    checks = [
        Check("characterisation", "Thm 2.4: the following are equivalent", "CHARACTERISATION",
              check_characterisation),
        Check("two_section_cop_number", "Obs 1.1: c(H)=c([H]_2)", "CHARACTERISATION", check_two_section_cop_number),
        Check("deletion_structure", "Prop 2.1, Lemmas 2.2/2.3, Prop 2.6, weak deletion", "CHARACTERISATION",
              check_deletion_structure),
        Check("hypertrees", "Thm 3.2: c(T)=1", "HYPERTREE", check_hypertrees),
        Check("host_tree_paths", "Obs 3.1(a),(b)", "HYPERTREE", check_host_tree_paths),
    ]
    for suite, expr, want, anchor in COP_NUMBERS:
        checks.append(Check(f"copnum[{expr}]", anchor, suite, _cop_number_check(expr, want)))
    for suite, kind, args, anchor in COP_STRATEGY_CAPTURES:
        checks.append(Check(f"cop-strategy[{kind}: {args}]", anchor, suite, _cop_capture_check(kind, args)))
    for suite, kind, args, rounds, anchor in EVADERS:
        checks.append(Check(f"evader[{kind}: {args}]", anchor, suite, _evader_check(kind, args, rounds)))
    checks += [
        Check("product_inequality", "Eq. (2) over p<=4, q<=3, orders in {2,3,4}", "PRODUCTS", check_inequality_grid),
        Check("product_inequality_min_degree", "Eq. (2) with hypergraph orders >= 3", "PRODUCTS",
              check_inequality_min_degree),
        Check("active_robber_tree_products", "Lemma 4.5: one cop vs active robber on T1□T2", "PRODUCTS", check_active_tree_products),
        Check("product_two_section", "Prop 4.4: [G□H]_2=[G]_2□[H]_2", "PRODUCTS", check_product_two_section),
    ]
    order = {s: i for i, s in enumerate(SUITES)}
    return sorted(checks, key=lambda c: order[c.suite])


def run_check(check: Check, seed: int) -> CheckRecord:
    t0 = time.perf_counter()
    out = check.run(seed)
    return CheckRecord(check.name, check.anchor, out.expected, out.computed,
                       "PASS" if out.passed else "FAIL", time.perf_counter() - t0)


def run_suite(suite: str = "ALL", budget: float | None = None, seed: int = 1) -> VerificationReport:
    """Run a suite's checks in declaration order; once ``budget`` seconds are
    spent the remaining checks are recorded as SKIPPED."""
    suite = suite.upper()
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    report = VerificationReport(suite, seed, budget)
    start = time.perf_counter()
    for check in all_checks():
        if suite != "ALL" and check.suite != suite:
            continue
        if budget is not None and time.perf_counter() - start >= budget:
            report.records.append(CheckRecord(check.name, check.anchor, None, None, "SKIPPED", 0.0))
            continue
        report.records.append(run_check(check, seed))
    return report
