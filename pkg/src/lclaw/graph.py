"""Bitset graphs, vertex-set algebra and claw detection.

Vertex sets are plain Python ints used as bitmasks (bit ``v`` set iff vertex
``v`` is a member). Graphs are immutable; algorithms work on induced views by
passing a ``scope`` mask instead of building subgraphs.
"""

from __future__ import annotations

import os
from collections.abc import Iterable, Iterator, Sequence
from typing import NamedTuple

VertexSet = int

# Expensive precondition checks (claw-freeness of inputs, induced checks of
# embeddings). Off unless LCLAW_DEBUG=1; tests switch it on per case.
DEBUG = os.environ.get("LCLAW_DEBUG", "") == "1"


def mask_of(vertices: Iterable[int]) -> VertexSet:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def iter_bits(mask: VertexSet) -> Iterator[int]:
    """Yield the members of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_list(mask: VertexSet) -> list[int]:
    return list(iter_bits(mask))


def lowest(mask: VertexSet) -> int:
    return (mask & -mask).bit_length() - 1


def popcount(mask: VertexSet) -> int:
    return bin(mask).count("1")


class Graph:
    """Undirected simple graph on vertices ``0..n-1`` with bitset rows."""

    __slots__ = ("n", "adj", "_edges")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self.adj: tuple[int, ...] = tuple(adj)
        self._edges: list[tuple[int, int]] | None = None

    @classmethod
    def from_adjacency(cls, rows: Sequence[int]) -> Graph:
        g = cls.__new__(cls)
        g.n = len(rows)
        g.adj = tuple(rows)
        g._edges = None
        for v, row in enumerate(g.adj):
            if row >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            for u in iter_bits(row):
                if u >= g.n or not g.adj[u] >> v & 1:
                    raise ValueError(f"adjacency not symmetric at ({v}, {u})")
        return g

    @property
    def full(self) -> VertexSet:
        return (1 << self.n) - 1

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        if self._edges is None:
            self._edges = [
                (u, v)
                for u in range(self.n)
                for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))
            ]
        return self._edges

    @property
    def m(self) -> int:
        return len(self.edges())

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int, scope: VertexSet | None = None) -> int:
        row = self.adj[v] if scope is None else self.adj[v] & scope
        return popcount(row)

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Return the graph with vertex ``v`` renamed to ``perm[v]``."""
        return Graph(self.n, ((perm[u], perm[v]) for u, v in self.edges()))

    def induced(self, vertices: Sequence[int]) -> Graph:
        """Copy of ``G[vertices]`` with vertices renumbered in the given order."""
        index = {v: i for i, v in enumerate(vertices)}
        return Graph(
            len(vertices),
            ((index[u], index[v]) for u, v in self.edges() if u in index and v in index),
        )

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()!r})"


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    offset = 0
    for g in graphs:
        edges.extend((u + offset, v + offset) for u, v in g.edges())
        offset += g.n
    return Graph(offset, edges)


# Small named graphs used throughout tests and docs.

def path(k: int) -> Graph:
    return Graph(k, ((i, i + 1) for i in range(k - 1)))


def cycle(k: int) -> Graph:
    return Graph(k, [(i, (i + 1) % k) for i in range(k)])


def complete(k: int) -> Graph:
    return Graph(k, ((i, j) for i in range(k) for j in range(i + 1, k)))


def claw() -> Graph:
    """K_{1,3} with center 0 and leaves 1, 2, 3."""
    return Graph(4, [(0, 1), (0, 2), (0, 3)])


def chair() -> Graph:
    """Claw 0;1,2,3 with a pendant vertex 4 attached to leaf 3."""
    return Graph(5, [(0, 1), (0, 2), (0, 3), (3, 4)])


def line_graph(root: Graph) -> tuple[Graph, list[tuple[int, int]]]:
    """Line graph of ``root`` and the vertex -> root edge map."""
    edges = root.edges()
    by_end: dict[int, list[int]] = {}
    for i, (u, v) in enumerate(edges):
        by_end.setdefault(u, []).append(i)
        by_end.setdefault(v, []).append(i)
    lg_edges = set()
    for incident in by_end.values():
        for a in range(len(incident)):
            for b in range(a + 1, len(incident)):
                lg_edges.add((incident[a], incident[b]))
    return Graph(len(edges), sorted(lg_edges)), list(edges)


# Set operations


def neighborhood(g: Graph, U: VertexSet, scope: VertexSet | None = None) -> VertexSet:
    """N_G(U): vertices outside U adjacent to some vertex of U."""
    nb = 0
    for u in iter_bits(U):
        nb |= g.adj[u]
    nb &= ~U
    return nb if scope is None else nb & scope


def anti_neighborhood(g: Graph, U: VertexSet, scope: VertexSet | None = None) -> VertexSet:
    """A_G(U): vertices neither in U nor adjacent to U (within ``scope``)."""
    if scope is None:
        scope = g.full
    nb = U
    for u in iter_bits(U):
        nb |= g.adj[u]
    return scope & ~nb


def is_independent(g: Graph, S: VertexSet) -> bool:
    for v in iter_bits(S):
        if g.adj[v] & S:
            return False
    return True


def components(g: Graph, scope: VertexSet | None = None) -> list[VertexSet]:
    """Connected components of ``G[scope]``, ordered by lowest vertex."""
    rest = g.full if scope is None else scope
    comps = []
    while rest:
        frontier = rest & -rest
        comp = 0
        while frontier:
            comp |= frontier
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= g.adj[v]
            frontier = nxt & rest & ~comp
        comps.append(comp)
        rest &= ~comp
    return comps


# Claws


class Claw(NamedTuple):
    center: int
    leaves: tuple[int, int, int]

    @property
    def vertices(self) -> VertexSet:
        return mask_of((self.center, *self.leaves))


def _independent_triple(g: Graph, cand: VertexSet) -> tuple[int, int, int] | None:
    # lowest triple of pairwise nonadjacent vertices in cand
    for x in iter_bits(cand):
        rest_x = cand & ~g.adj[x] & ~((2 << x) - 1)
        for y in iter_bits(rest_x):
            rest_y = rest_x & ~g.adj[y] & ~((2 << y) - 1)
            if rest_y:
                return (x, y, lowest(rest_y))
    return None


def _independent_pair(g: Graph, cand: VertexSet) -> tuple[int, int] | None:
    for x in iter_bits(cand):
        rest = cand & ~g.adj[x] & ~((2 << x) - 1)
        if rest:
            return (x, lowest(rest))
    return None


def find_claw_at(g: Graph, v: int, scope: VertexSet | None = None) -> Claw | None:
    """Some induced claw of ``G[scope]`` containing ``v``, or None.

    Tries ``v`` as the center first, then as a leaf of each neighbor in
    ascending order; the lowest-id witness in that order is returned.
    """
    if scope is None:
        scope = g.full
    nv = g.adj[v] & scope
    triple = _independent_triple(g, nv)
    if triple is not None:
        return Claw(v, triple)
    outside = scope & ~nv & ~(1 << v)
    for c in iter_bits(nv):
        pair = _independent_pair(g, g.adj[c] & outside)
        if pair is not None:
            leaves = tuple(sorted((v, *pair)))
            return Claw(c, leaves)  # type: ignore[arg-type]
    return None


def find_claw(g: Graph, scope: VertexSet | None = None) -> Claw | None:
    """Witness claw of ``G[scope]`` (lowest center first), or None."""
    if scope is None:
        scope = g.full
    for c in iter_bits(scope):
        triple = _independent_triple(g, g.adj[c] & scope)
        if triple is not None:
            return Claw(c, triple)
    return None


def is_claw_free(g: Graph, restricted_to: VertexSet | None = None) -> bool:
    return find_claw(g, restricted_to) is None


def extension_stays_claw_free(g: Graph, H: VertexSet, v: int) -> bool:
    """Whether ``G[H + v]`` is claw-free, given that ``G[H]`` already is.

    Only claws through ``v`` are inspected.
    """
    if DEBUG:
        assert find_claw(g, H) is None, "extension_stays_claw_free: G[H] has a claw"
        assert not H >> v & 1
    return find_claw_at(g, v, H | (1 << v)) is None


def iter_claws(g: Graph, scope: VertexSet | None = None) -> Iterator[Claw]:
    """Every induced claw of ``G[scope]`` exactly once, by center then leaves."""
    if scope is None:
        scope = g.full
    for c in iter_bits(scope):
        nc = g.adj[c] & scope
        for x in iter_bits(nc):
            rx = nc & ~g.adj[x] & ~((2 << x) - 1)
            for y in iter_bits(rx):
                for z in iter_bits(rx & ~g.adj[y] & ~((2 << y) - 1)):
                    yield Claw(c, (x, y, z))


def claw_packing(g: Graph, cap: int, scope: VertexSet | None = None) -> list[Claw]:
    """A largest list (at most ``cap`` long) of pairwise anti-adjacent claws.

    Claws in a packing are disjoint, so they are searched in increasing order of
    their lowest vertex; every packing is reached exactly once in that order.
    """
    if scope is None:
        scope = g.full
    best: list[Claw] = []

    def search(sc: VertexSet, floor: int, chosen: list[Claw]) -> bool:
        nonlocal best
        if len(chosen) > len(best):
            best = list(chosen)
            if len(best) >= cap:
                return True
        for claw_ in iter_claws(g, sc):
            verts = claw_.vertices
            low = lowest(verts)
            if low < floor:
                continue
            chosen.append(claw_)
            if search(anti_neighborhood(g, verts, sc), low + 1, chosen):
                return True
            chosen.pop()
        return False

    if cap > 0:
        search(scope, 0, [])
    return best


def is_l_claw_free(g: Graph, l: int, scope: VertexSet | None = None) -> bool:
    """True iff ``G[scope]`` has no ``l`` pairwise anti-adjacent induced claws."""
    if l < 1:
        raise ValueError("l must be a positive integer")
    return len(claw_packing(g, l, scope)) < l


# 2K2


def find_induced_2k2(g: Graph, scope: VertexSet | None = None) -> tuple[tuple[int, int], tuple[int, int]] | None:
    """Two edges with no edge between them (an induced 2K2), or None."""
    if scope is None:
        scope = g.full
    edges = [(u, v) for u, v in g.edges() if scope >> u & 1 and scope >> v & 1]
    for i, (a, b) in enumerate(edges):
        far = anti_neighborhood(g, (1 << a) | (1 << b), scope)
        for c, d in edges[i + 1:]:
            if far >> c & 1 and far >> d & 1:
                return (a, b), (c, d)
    return None


# Maximal independent sets


class EnumerationCapExceeded(RuntimeError):
    """Raised when an enumerator would emit more sets than allowed."""


def maximal_independent_sets(
    g: Graph, scope: VertexSet | None = None, cap: int | None = 1_000_000
) -> Iterator[VertexSet]:
    """Every maximal independent set of ``G[scope]`` exactly once.

    Bron-Kerbosch with Tomita pivoting run on the complement graph, so each
    emitted maximal clique of the complement is a maximal independent set.
    """
    if scope is None:
        scope = g.full
    # complement rows restricted to scope
    co = [(scope & ~g.adj[v] & ~(1 << v)) if scope >> v & 1 else 0 for v in range(g.n)]
    emitted = 0

    def expand(R: VertexSet, P: VertexSet, X: VertexSet) -> Iterator[VertexSet]:
        nonlocal emitted
        if not P and not X:
            emitted += 1
            if cap is not None and emitted > cap:
                raise EnumerationCapExceeded(f"more than {cap} maximal independent sets")
            yield R
            return
        pivot_pool = P | X
        pivot = max(iter_bits(pivot_pool), key=lambda u: popcount(co[u] & P))
        for v in iter_bits(P & ~co[pivot]):
            bit = 1 << v
            yield from expand(R | bit, P & co[v], X & co[v])
            P &= ~bit
            X |= bit

    if scope == 0:
        emitted = 1
        yield 0
        return
    yield from expand(0, scope, 0)
