"""Exact maximum weight independent set on claw-free graphs.

The solver ladder drops non-positive vertices, splits into components, and for
each component either recovers a root graph ``H`` with ``L(H)`` equal to the
component (then solves a maximum weight matching on ``H``) or falls back to
branch and bound. The fallback is class-agnostic, so the result is exact for
any input; claw-freeness only matters for the guarantee that members of a good
family are cheap to solve.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

import networkx as nx

from lclaw import graph as _graph
from lclaw.graph import (
    Graph,
    VertexSet,
    components,
    find_claw,
    iter_bits,
    lowest,
    popcount,
    to_list,
)

Weights = Sequence[int]
SOLVERS = ("auto", "matching", "bnb", "brute")


@dataclass(frozen=True)
class Solution:
    vertices: VertexSet
    weight: int

    def as_list(self) -> list[int]:
        return to_list(self.vertices)

    def __add__(self, other: Solution) -> Solution:
        return Solution(self.vertices | other.vertices, self.weight + other.weight)


EMPTY = Solution(0, 0)


class NotALineGraph(ValueError):
    pass


class TooLarge(ValueError):
    pass


def check_weights(g: Graph, w: Weights) -> None:
    if len(w) != g.n:
        raise ValueError(f"expected {g.n} weights, got {len(w)}")


def positive_part(w: Weights, scope: VertexSet) -> VertexSet:
    return scope & sum(1 << v for v, x in enumerate(w) if x > 0)


def weight_of(w: Weights, S: VertexSet) -> int:
    return sum(w[v] for v in iter_bits(S))


# Line graph roots


@dataclass(frozen=True)
class RootGraph:
    """Root ``H`` of a line graph; ``vertex_of[i]`` is the host vertex of edge ``edges[i]``."""

    n: int
    edges: tuple[tuple[int, int], ...]
    vertex_of: tuple[int, ...]

    def graph(self) -> Graph:
        return Graph(self.n, self.edges)


def _bfs_order(g: Graph, scope: VertexSet) -> list[int]:
    order = []
    for comp in components(g, scope):
        seen = comp & -comp
        queue = [lowest(comp)]
        while queue:
            x = queue.pop(0)
            order.append(x)
            fresh = g.adj[x] & comp & ~seen
            seen |= fresh
            queue.extend(iter_bits(fresh))
    return order


def line_graph_root(g: Graph, scope: VertexSet | None = None) -> RootGraph | None:
    """A root graph ``H`` with ``L(H) = G[scope]``, or None if there is none.

    Vertices are placed in BFS order; each new vertex becomes a root edge that
    touches exactly the root edges of its already-placed neighbors. Choices
    only branch while the placed part is tiny (Whitney), and a fresh endpoint
    is tried before an existing one, so a triangle gets the star K_{1,3} root.
    """
    if scope is None:
        scope = g.full
    order = _bfs_order(g, scope)
    ends: dict[int, tuple[int, int]] = {}
    incident: list[VertexSet] = []  # per root vertex: placed host vertices touching it
    edges: set[tuple[int, int]] = set()

    def new_vertex() -> int:
        incident.append(0)
        return len(incident) - 1

    def place(idx: int, placed: VertexSet) -> bool:
        if idx == len(order):
            return True
        y = order[idx]
        bit = 1 << y
        P = g.adj[y] & placed
        options: list[tuple[int | None, int | None]] = []
        if not P:
            options.append((None, None))
        else:
            for s in ends[lowest(P)]:
                if incident[s] & ~P:
                    continue
                rest = P & ~incident[s]
                if not rest:
                    options.append((s, None))
                    continue
                for t in ends[lowest(rest)]:
                    if t != s and not incident[t] & ~P and incident[s] | incident[t] == P:
                        if (min(s, t), max(s, t)) not in edges:
                            options.append((s, t))
        for s, t in options:
            size = len(incident)
            if s is None:
                s = new_vertex()
            if t is None:
                t = new_vertex()
            key = (min(s, t), max(s, t))
            edges.add(key)
            ends[y] = (s, t)
            incident[s] |= bit
            incident[t] |= bit
            if place(idx + 1, placed | bit):
                return True
            incident[s] &= ~bit
            incident[t] &= ~bit
            del ends[y]
            edges.discard(key)
            del incident[size:]
        return False

    if not place(0, 0):
        return None
    root_edges = tuple(ends[y] for y in order)
    return RootGraph(len(incident), root_edges, tuple(order))


def max_weight_matching(root: RootGraph, edge_weights: Sequence[int]) -> list[int]:
    """Indices of root edges forming a maximum weight matching."""
    if any(x < 0 for x in edge_weights):
        raise ValueError("edge weights must be non-negative")
    h = nx.Graph()
    index = {}
    for i, ((a, b), x) in enumerate(zip(root.edges, edge_weights)):
        h.add_edge(a, b, weight=x)
        index[(min(a, b), max(a, b))] = i
    mate = nx.max_weight_matching(h, maxcardinality=False, weight="weight")
    return sorted(index[(min(a, b), max(a, b))] for a, b in mate)


def _solve_by_matching(root: RootGraph, w: Weights) -> Solution:
    chosen = max_weight_matching(root, [w[v] for v in root.vertex_of])
    S = 0
    for i in chosen:
        S |= 1 << root.vertex_of[i]
    return Solution(S, weight_of(w, S))


# Branch and bound


def _clique_cover_bound(g: Graph, P: VertexSet, w: Weights) -> int:
    # Greedy clique cover by descending weight; each clique contributes its first
    # (heaviest) vertex, which bounds any independent set's intersection with it.
    commons: list[VertexSet] = []
    bound = 0
    for v in sorted(iter_bits(P), key=lambda x: -w[x]):
        for j, common in enumerate(commons):
            if common >> v & 1:
                commons[j] = common & g.adj[v]
                break
        else:
            commons.append(g.adj[v] & P)
            bound += w[v]
    return bound


def mwis_bnb(g: Graph, scope: VertexSet, w: Weights) -> Solution:
    """Branch and bound on highest-degree vertices with clique-cover bounds."""
    P0 = positive_part(w, scope)
    best_w, best_s = 0, 0

    def branch(P: VertexSet, cur_w: int, cur_s: VertexSet) -> None:
        nonlocal best_w, best_s
        free = 0
        for v in iter_bits(P):
            if not g.adj[v] & P:
                free |= 1 << v
        if free:
            P &= ~free
            cur_s |= free
            cur_w += weight_of(w, free)
        if cur_w > best_w:
            best_w, best_s = cur_w, cur_s
        if not P or cur_w + _clique_cover_bound(g, P, w) <= best_w:
            return
        v = max(iter_bits(P), key=lambda x: (popcount(g.adj[x] & P), -x))
        bit = 1 << v
        branch(P & ~bit & ~g.adj[v], cur_w + w[v], cur_s | bit)
        branch(P & ~bit, cur_w, cur_s)

    branch(P0, 0, 0)
    return Solution(best_s, best_w)


def mwis_bruteforce(
    g: Graph, scope: VertexSet | None = None, w: Weights | None = None, max_vertices: int = 40
) -> Solution:
    """Exact MWIS of ``G[scope]`` by memoized include/exclude search.

    No class assumptions and no bounding; this is the reference oracle.
    """
    if scope is None:
        scope = g.full
    if w is None:
        w = [1] * g.n
    if popcount(scope) > max_vertices:
        raise TooLarge(f"brute force limited to {max_vertices} vertices")
    memo: dict[VertexSet, tuple[int, VertexSet]] = {0: (0, 0)}

    def best(P: VertexSet) -> tuple[int, VertexSet]:
        if P in memo:
            return memo[P]
        v = lowest(P)
        bit = 1 << v
        out_w, out_s = best(P & ~bit)
        if w[v] > 0:
            in_w, in_s = best(P & ~bit & ~g.adj[v])
            if in_w + w[v] > out_w:
                out_w, out_s = in_w + w[v], in_s | bit
        memo[P] = (out_w, out_s)
        return out_w, out_s

    wt, S = best(scope)
    return Solution(S, wt)


def mwis_clawfree(
    g: Graph, scope: VertexSet | None, w: Weights, solver: str = "auto"
) -> Solution:
    """Exact MWIS of the claw-free graph ``G[scope]``.

    ``solver``: "auto" (matching on line-graph components, otherwise branch and
    bound), "matching" (NotALineGraph for other components), "bnb", "brute".
    """
    if scope is None:
        scope = g.full
    if solver not in SOLVERS:
        raise ValueError(f"unknown solver {solver!r}")
    if _graph.DEBUG:
        assert find_claw(g, scope) is None, "mwis_clawfree: scope is not claw-free"
    total = EMPTY
    for comp in components(g, positive_part(w, scope)):
        if comp & (comp - 1) == 0:
            total += Solution(comp, w[lowest(comp)])
            continue
        if solver == "brute":
            part = mwis_bruteforce(g, comp, w, max_vertices=popcount(comp))
        elif solver == "bnb":
            part = mwis_bnb(g, comp, w)
        else:
            root = line_graph_root(g, comp)
            if root is not None:
                part = _solve_by_matching(root, w)
            elif solver == "matching":
                raise NotALineGraph(f"component {to_list(comp)} is not a line graph")
            else:
                part = mwis_bnb(g, comp, w)
        total += part
    return total
