"""Independent brute-force oracles shared by the tests.

Everything here enumerates subsets or injections directly and shares no code
path with the package beyond the Graph container.
"""

from itertools import combinations, permutations

import networkx as nx
from hypothesis import strategies as st

from lclaw.graph import Graph


def subsets(vertices):
    vertices = list(vertices)
    for r in range(len(vertices) + 1):
        yield from combinations(vertices, r)


def independent(g, S):
    return all(not g.has_edge(u, v) for u, v in combinations(S, 2))


def subset_mwis(g, w, vertices=None):
    """Best weight over all independent subsets (n <= ~16)."""
    vertices = range(g.n) if vertices is None else vertices
    return max(sum(w[v] for v in S) for S in subsets(vertices) if independent(g, S))


def subset_maximal_independent_sets(g):
    out = set()
    for S in subsets(range(g.n)):
        if independent(g, S) and all(
            any(g.has_edge(x, s) for s in S) for x in range(g.n) if x not in S
        ):
            out.add(frozenset(S))
    return out


def has_claw_brute(g, vertices=None):
    vertices = list(range(g.n)) if vertices is None else list(vertices)
    for quad in combinations(vertices, 4):
        for c in quad:
            leaves = [x for x in quad if x != c]
            if all(g.has_edge(c, x) for x in leaves) and independent(g, leaves):
                return True
    return False


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def induced_embeddings_vf2(g, pattern, anchor):
    """(image, white image) keys of induced copies of ``pattern`` with top -> anchor."""
    pg = to_nx(pattern.graph())
    matcher = nx.algorithms.isomorphism.GraphMatcher(to_nx(g), pg)
    keys = set()
    for iso in matcher.subgraph_isomorphisms_iter():
        inv = {p: h for h, p in iso.items()}
        if inv[0] != anchor:
            continue
        image = frozenset(inv.values())
        white = frozenset(inv[i] for i, name in enumerate(pattern.names) if name in pattern.whites)
        keys.add((image, white))
    return keys


def induced_embeddings_brute(g, pattern, anchor):
    pg = pattern.graph()
    keys = set()
    others = [v for v in range(g.n) if v != anchor]
    for rest in permutations(others, pg.n - 1):
        m = (anchor, *rest)
        if all(
            pg.has_edge(i, j) == g.has_edge(m[i], m[j])
            for i in range(pg.n)
            for j in range(i + 1, pg.n)
        ):
            white = frozenset(m[i] for i, name in enumerate(pattern.names) if name in pattern.whites)
            keys.add((frozenset(m), white))
    return keys


@st.composite
def graphs(draw, min_n=0, max_n=9):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph(n, chosen)
