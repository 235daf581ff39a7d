"""The fourteen role-labeled claw patterns L1..L14 and their induced embeddings.

Each pattern has a distinguished white ``top`` vertex, a set of white vertices
(always independent) and black vertices. A maximal independent set through an
anchor vertex that completes a claw lies inside ``whites(e) | anti(e)`` for
some embedding ``e`` of some pattern with the anchor as top.

Vertex names follow the case analysis the catalog was rebuilt from: ``v`` is
the top, ``a, b, c`` the other claw vertices, ``s*`` independent-set vertices.
"""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass
from functools import cached_property

from lclaw import graph as _graph
from lclaw.graph import (
    Graph,
    VertexSet,
    anti_neighborhood,
    find_claw,
    is_independent,
    mask_of,
    to_list,
)


@dataclass(frozen=True)
class LPattern:
    k: int
    names: tuple[str, ...]  # names[0] is the top vertex
    whites: frozenset[str]
    edges: tuple[tuple[str, str], ...]

    @property
    def top(self) -> str:
        return self.names[0]

    @property
    def blacks(self) -> frozenset[str]:
        return frozenset(self.names) - self.whites

    def graph(self) -> Graph:
        """The pattern as a Graph whose vertex ``i`` is ``names[i]``."""
        idx = {name: i for i, name in enumerate(self.names)}
        return Graph(len(self.names), ((idx[x], idx[y]) for x, y in self.edges))

    @cached_property
    def plan(self) -> tuple[tuple[int, tuple[int, ...], tuple[int, ...]], ...]:
        """Search plan: per step, the pattern vertex and its earlier (non)neighbors.

        Vertices are visited in BFS order from the top, so every step after the
        first has at least one already-placed neighbor.
        """
        g = self.graph()
        order = [0]
        seen = 1
        i = 0
        while i < len(order):
            for u in range(g.n):
                if g.has_edge(order[i], u) and not seen >> u & 1:
                    order.append(u)
                    seen |= 1 << u
            i += 1
        if len(order) != g.n:
            raise ValueError(f"L{self.k} is not connected")
        steps = []
        for pos, u in enumerate(order):
            before = range(pos)
            steps.append((
                u,
                tuple(p for p in before if g.has_edge(order[p], u)),
                tuple(p for p in before if not g.has_edge(order[p], u)),
            ))
        return tuple(steps)

    @cached_property
    def white_index(self) -> tuple[int, ...]:
        return tuple(i for i, name in enumerate(self.names) if name in self.whites)


def _pattern(k: int, names: str, whites: str, edges: str) -> LPattern:
    return LPattern(
        k=k,
        names=tuple(names.split()),
        whites=frozenset(whites.split()),
        edges=tuple(tuple(e.split("-")) for e in edges.split()),  # type: ignore[misc]
    )


_STAR = "v-a v-b v-c"  # top is the claw center
_LEAF = "b-v b-a b-c"  # top is a claw leaf, b the center
_HUB = "s-a s-b s-c"

_CATALOG = (
    _pattern(1, "v a s1 s2", "v s1 s2", "a-v a-s1 a-s2"),
    _pattern(2, "v a b c", "v", _STAR),
    _pattern(3, "v a b c s1", "v s1", f"{_STAR} a-s1"),
    _pattern(4, "v a b c s1 s2", "v s1 s2", f"{_STAR} a-s1 b-s2"),
    _pattern(5, "v a b c s1 s2 s3", "v s1 s2 s3", f"{_STAR} a-s1 b-s2 c-s3"),
    _pattern(6, "v a b c s1", "v s1", f"{_STAR} a-s1 b-s1"),
    _pattern(7, "v a b c s1 s3", "v s1 s3", f"{_STAR} a-s1 b-s1 c-s3"),
    _pattern(8, "v a b c s", "v a s", "b-v b-a b-c c-s"),
    _pattern(9, "v a b c s1 s2", "v s1 s2", f"{_LEAF} a-s1 c-s2"),
    _pattern(10, "v a b c s1", "v s1", f"{_LEAF} a-s1 c-s1"),
    _pattern(11, "v a b c s", "v s", f"{_LEAF} {_HUB}"),
    _pattern(12, "v a b c s s1", "v s s1", f"{_LEAF} {_HUB} a-s1"),
    _pattern(13, "v a b c s s1 s2", "v s s1 s2", f"{_LEAF} {_HUB} a-s1 c-s2"),
    _pattern(14, "v a b c s s1", "v s s1", f"{_LEAF} {_HUB} a-s1 c-s1"),
)


def check_pattern(p: LPattern) -> None:
    names = set(p.names)
    if len(names) != len(p.names) or len(names) > 7:
        raise ValueError(f"L{p.k}: bad vertex list")
    if not p.whites <= names or p.top not in p.whites:
        raise ValueError(f"L{p.k}: whites must be vertices and contain the top")
    for x, y in p.edges:
        if x not in names or y not in names or x == y:
            raise ValueError(f"L{p.k}: bad edge {x}-{y}")
    g = p.graph()
    if not is_independent(g, mask_of(p.white_index)):
        raise ValueError(f"L{p.k}: white vertices are not independent")
    if find_claw(g) is None:
        raise ValueError(f"L{p.k}: no induced claw")
    p.plan  # connectivity


for _p in _CATALOG:
    check_pattern(_p)


def pattern_catalog() -> list[LPattern]:
    """L1..L14 in order (``catalog[k - 1]`` is L_k)."""
    return list(_CATALOG)


@dataclass(frozen=True)
class Embedding:
    """Induced copy of pattern ``k`` in a host graph.

    ``mapping[i]`` is the host vertex of ``pattern.names[i]``.
    """

    k: int
    mapping: tuple[int, ...]
    image: VertexSet
    white_image: VertexSet

    @property
    def pattern(self) -> LPattern:
        return _CATALOG[self.k - 1]

    def as_dict(self) -> dict[str, int]:
        return dict(zip(self.pattern.names, self.mapping))


def _embed(g: Graph, scope: VertexSet, anchor: int, p: LPattern) -> Iterator[tuple[int, ...]]:
    plan = p.plan
    size = len(plan)
    host = [0] * size  # host vertex per plan position
    placed = [0] * size  # pattern index per plan position
    adj = g.adj

    def rec(pos: int, used: VertexSet) -> Iterator[tuple[int, ...]]:
        if pos == size:
            out = [0] * size
            for q in range(size):
                out[placed[q]] = host[q]
            yield tuple(out)
            return
        u, nbrs, non = plan[pos]
        cand = scope & ~used
        for q in nbrs:
            cand &= adj[host[q]]
        for q in non:
            cand &= ~adj[host[q]]
        while cand:
            low = cand & -cand
            cand ^= low
            host[pos] = low.bit_length() - 1
            placed[pos] = u
            yield from rec(pos + 1, used | low)

    host[0] = anchor
    placed[0] = plan[0][0]
    yield from rec(1, 1 << anchor)


def enumerate_embeddings(g: Graph, scope: VertexSet, anchor: int) -> Iterator[Embedding]:
    """Induced embeddings of every L_k into ``G[scope]`` with top -> ``anchor``.

    Emitted by ascending k, then by sorted image. Embeddings sharing the same
    (image, white image) pair with an earlier one are skipped.
    """
    if not scope >> anchor & 1:
        raise ValueError(f"anchor {anchor} not in scope")
    seen: set[tuple[VertexSet, VertexSet]] = set()
    for p in _CATALOG:
        found = []
        for mapping in _embed(g, scope, anchor, p):
            image = mask_of(mapping)
            white = mask_of(mapping[i] for i in p.white_index)
            key = (image, white)
            if key in seen:
                continue
            seen.add(key)
            found.append((sorted(mapping), Embedding(p.k, mapping, image, white)))
        found.sort(key=lambda t: t[0])
        for _, e in found:
            if _graph.DEBUG:
                assert is_induced_copy(g, e)
            yield e


def is_induced_copy(g: Graph, e: Embedding) -> bool:
    """Re-check that ``e.mapping`` is an induced isomorphism of its pattern."""
    pg = e.pattern.graph()
    if len(set(e.mapping)) != pg.n:
        return False
    return all(
        pg.has_edge(i, j) == g.has_edge(e.mapping[i], e.mapping[j])
        for i in range(pg.n)
        for j in range(i + 1, pg.n)
    )


def embedding_member(g: Graph, scope: VertexSet, e: Embedding) -> tuple[VertexSet, VertexSet]:
    """(white image, anti-neighborhood of the whole image within ``scope``)."""
    return e.white_image, anti_neighborhood(g, e.image, scope)


def format_catalog() -> str:
    """Text atlas: one block per pattern with roles and edge list."""
    lines = []
    for p in _CATALOG:
        blacks = " ".join(n for n in p.names if n in p.blacks)
        whites = " ".join(n for n in p.names if n in p.whites)
        lines.append(f"L{p.k}: top={p.top} white=[{whites}] black=[{blacks}] |V|={len(p.names)}")
        lines.append("  edges: " + " ".join(f"{x}-{y}" for x, y in p.edges))
    return "\n".join(lines)


def describe(e: Embedding) -> str:
    return f"L{e.k} image={to_list(e.image)} white={to_list(e.white_image)}"
