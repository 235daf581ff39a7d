"""DIMACS-style instance files, family dumps and certified random generators.

File format (1-based vertex ids)::

    c name <name>          optional
    c class <tag>          optional: clawfree | 2k2free | lclaw(<l>)
    p edge <n> <m>
    e <u> <v>              m distinct edges
    n <v> <w>              optional vertex weight, default 1
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass, field

from lclaw.family import Family
from lclaw.graph import (
    Graph,
    VertexSet,
    disjoint_union,
    find_claw,
    find_claw_at,
    find_induced_2k2,
    is_l_claw_free,
    line_graph,
    mask_of,
    to_list,
)
from lclaw.patterns import pattern_catalog

CERTIFY_LIMIT = 30


@dataclass(frozen=True)
class Instance:
    graph: Graph
    weights: tuple[int, ...]
    name: str = ""
    tag: str | None = None

    def __post_init__(self):
        if len(self.weights) != self.graph.n:
            raise ValueError("weight vector length must equal the vertex count")


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class MalformedHeader(ParseError):
    pass


class MalformedLine(ParseError):
    pass


class VertexOutOfRange(ParseError):
    pass


class DuplicateEdge(ParseError):
    pass


class SelfLoop(ParseError):
    pass


class EdgeCountMismatch(ParseError):
    pass


_TAG = re.compile(r"^(clawfree|2k2free|lclaw\((\d+)\))$")


def _ints(parts: list[str], lineno: int) -> list[int]:
    try:
        return [int(x) for x in parts]
    except ValueError:
        raise MalformedLine(f"expected integers, got {' '.join(parts)!r}", lineno) from None


def parse_dimacs(text: str, name: str = "") -> Instance:
    n = m = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    weights: dict[int, int] = {}
    tag = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        parts = line.split()
        kind = parts[0]
        if kind == "c":
            if len(parts) >= 3 and parts[1] == "name":
                name = " ".join(parts[2:])
            elif len(parts) == 3 and parts[1] == "class" and _TAG.match(parts[2]):
                tag = parts[2]
            continue
        if kind == "p":
            if n is not None:
                raise MalformedHeader("second problem line", lineno)
            if len(parts) != 4 or parts[1] not in ("edge", "col"):
                raise MalformedHeader("expected 'p edge <n> <m>'", lineno)
            try:
                n, m = int(parts[2]), int(parts[3])
            except ValueError:
                raise MalformedHeader("vertex and edge counts must be integers", lineno) from None
            if n < 0 or m < 0:
                raise MalformedHeader("negative counts", lineno)
            continue
        if n is None:
            raise MalformedHeader(f"'{kind}' line before the problem line", lineno)
        if kind == "e":
            if len(parts) != 3:
                raise MalformedLine("expected 'e <u> <v>'", lineno)
            u, v = _ints(parts[1:], lineno)
            for x in (u, v):
                if not 1 <= x <= n:
                    raise VertexOutOfRange(f"vertex {x} not in 1..{n}", lineno)
            if u == v:
                raise SelfLoop(f"self-loop at vertex {u}", lineno)
            key = (min(u, v), max(u, v))
            if key in seen:
                raise DuplicateEdge(f"edge {u}-{v} listed twice", lineno)
            seen.add(key)
            edges.append((u - 1, v - 1))
        elif kind == "n":
            if len(parts) != 3:
                raise MalformedLine("expected 'n <v> <weight>'", lineno)
            v, x = _ints(parts[1:], lineno)
            if not 1 <= v <= n:
                raise VertexOutOfRange(f"vertex {v} not in 1..{n}", lineno)
            if v in weights:
                raise MalformedLine(f"weight of vertex {v} given twice", lineno)
            weights[v] = x
        else:
            raise MalformedLine(f"unknown line type {kind!r}", lineno)
    if n is None:
        raise MalformedHeader("missing problem line")
    if len(edges) != m:
        raise EdgeCountMismatch(f"header announces {m} edges, found {len(edges)}")
    w = tuple(weights.get(v, 1) for v in range(1, n + 1))
    return Instance(Graph(n, edges), w, name, tag)


def emit_dimacs(inst: Instance) -> str:
    g = inst.graph
    lines = []
    if inst.name:
        lines.append(f"c name {inst.name}")
    if inst.tag:
        lines.append(f"c class {inst.tag}")
    lines.append(f"p edge {g.n} {g.m}")
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges())
    lines.extend(f"n {v + 1} {x}" for v, x in enumerate(inst.weights) if x != 1)
    return "\n".join(lines) + "\n"


def read_instance(path: str) -> Instance:
    with open(path) as f:
        return parse_dimacs(f.read())


def write_instance(inst: Instance, path: str) -> None:
    with open(path, "w") as f:
        f.write(emit_dimacs(inst))


# Family dumps: a "# provenance" line followed by the member's sorted 1-based ids.


def format_family(fam: Family) -> str:
    lines = [f"# family {fam.kind}" + (f" l={fam.l}" if fam.l is not None else "")]
    for H in fam.sorted_members():
        lines.append("# " + fam.members[H].describe(base=1))
        lines.append(" ".join(str(v + 1) for v in to_list(H)))
    return "\n".join(lines) + "\n"


def parse_family(text: str) -> list[VertexSet]:
    members = []
    expect_member = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line.startswith("#"):
            expect_member = not line.startswith("# family")
            continue
        if not expect_member:
            if line:
                raise MalformedLine("member line without a provenance line", lineno)
            continue
        ids = _ints(line.split(), lineno)
        if any(x < 1 for x in ids):
            raise VertexOutOfRange("vertex ids are 1-based", lineno)
        members.append(mask_of(x - 1 for x in ids))
        expect_member = False
    return members


# Generators


def _weights(rng: random.Random, n: int, weight_range: tuple[int, int] | None) -> tuple[int, ...]:
    if weight_range is None:
        return (1,) * n
    lo, hi = weight_range
    return tuple(rng.randint(lo, hi) for _ in range(n))


def _shuffled(rng: random.Random, g: Graph) -> Graph:
    perm = list(range(g.n))
    rng.shuffle(perm)
    return g.relabel(perm)


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return Graph(n, ((u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p))


def random_root(rng: random.Random, m: int, density: float) -> Graph:
    """Random simple graph with exactly ``m`` edges and about ``density`` edge share."""
    r = 2 if m else 0
    while r * (r - 1) // 2 < m or (density > 0 and r * (r - 1) // 2 * density < m):
        r += 1
    pairs = [(u, v) for u in range(r) for v in range(u + 1, r)]
    return Graph(r, rng.sample(pairs, m))


def claw_gadget(rng: random.Random, size: int) -> Graph:
    """Random graph on ``size`` (4..7) vertices containing an induced claw."""
    while True:
        g = random_graph(rng, size, rng.uniform(0.25, 0.7))
        if find_claw(g) is not None:
            return g


def gen_lclaw_instance(
    seed: int,
    n: int,
    l: int,
    density: float = 0.5,
    weight_range: tuple[int, int] | None = None,
) -> Instance:
    """l-claw-free instance: up to l-1 claw gadgets plus one line-graph block.

    Every induced claw sits inside a single gadget (at most 7 vertices, so at
    most one claw of any anti-adjacent family), hence at most l-1 pairwise
    anti-adjacent claws exist. Vertex labels are shuffled.
    """
    if l < 2:
        raise ValueError("l must be at least 2")
    rng = random.Random(seed)
    while True:
        parts = []
        left = n
        for _ in range(l - 1):
            if left < 4:
                break
            size = rng.randint(4, min(7, left))
            parts.append(claw_gadget(rng, size))
            left -= size
        block, _ = line_graph(random_root(rng, left, density))
        g = _shuffled(rng, disjoint_union(*parts, block))
        if n > CERTIFY_LIMIT or is_l_claw_free(g, l):
            break
    w = _weights(rng, n, weight_range)
    return Instance(g, w, f"lclaw-l{l}-n{n}-s{seed}", f"lclaw({l})")


def gen_2k2free_instance(
    seed: int, n: int, cross: float | None = None, weight_range: tuple[int, int] | None = None
) -> Instance:
    """Random split graph (clique + independent set + random cross edges)."""
    rng = random.Random(seed)
    while True:
        k = rng.randint(0, n)
        p = rng.uniform(0.1, 0.9) if cross is None else cross
        edges = [(u, v) for u in range(k) for v in range(u + 1, k)]
        edges += [(u, v) for u in range(k) for v in range(k, n) if rng.random() < p]
        g = _shuffled(rng, Graph(n, edges))
        if n > CERTIFY_LIMIT or find_induced_2k2(g) is None:
            break
    w = _weights(rng, n, weight_range)
    return Instance(g, w, f"split-n{n}-s{seed}", "2k2free")


def gen_linegraph_instance(
    seed: int, root_n: int, density: float = 0.4, weight_range: tuple[int, int] | None = None
) -> Instance:
    """Line graph of a G(root_n, density) root; claw-free by construction."""
    rng = random.Random(seed)
    g, _ = line_graph(random_graph(rng, root_n, density))
    g = _shuffled(rng, g)
    return Instance(g, _weights(rng, g.n, weight_range), f"line-r{root_n}-s{seed}", "clawfree")


def gen_dense_lclaw_instance(
    seed: int,
    n: int,
    l: int,
    p: float = 0.6,
    weight_range: tuple[int, int] | None = None,
    tries: int = 10_000,
) -> Instance:
    """Rejection-sampled G(n, p) graph that has a claw but is l-claw-free.

    Unlike :func:`gen_lclaw_instance` the claws here interact with the rest of
    the graph, which exercises the covering-family machinery much harder.
    """
    rng = random.Random(seed)
    for _ in range(tries):
        g = random_graph(rng, n, p)
        if find_claw(g) is not None and is_l_claw_free(g, l):
            w = _weights(rng, n, weight_range)
            return Instance(g, w, f"dense-l{l}-n{n}-s{seed}", f"lclaw({l})")
    raise RuntimeError(f"no {l}-claw-free graph with a claw found for n={n}, p={p}")


@dataclass
class GenConfig:
    kind: str  # "lclaw" | "2k2" | "linegraph"
    seed: int = 0
    n: int = 12
    l: int = 2
    density: float = 0.5
    weight_range: tuple[int, int] | None = field(default=None)

    def build(self) -> Instance:
        if self.kind == "lclaw":
            return gen_lclaw_instance(self.seed, self.n, self.l, self.density, self.weight_range)
        if self.kind == "2k2":
            return gen_2k2free_instance(self.seed, self.n, None, self.weight_range)
        if self.kind == "linegraph":
            return gen_linegraph_instance(self.seed, self.n, self.density, self.weight_range)
        raise ValueError(f"unknown generator {self.kind!r}")


def claw_free_graph(rng: random.Random, n: int) -> Graph:
    """Random claw-free graph on at most ``n`` vertices from one of three families.

    Line graphs of random roots, dense G(n, p) graphs filtered for
    claw-freeness, and complements of triangle-free graphs.
    """
    kind = rng.randrange(3)
    if kind == 0:
        while True:
            g, _ = line_graph(random_graph(rng, rng.randint(3, 8), rng.uniform(0.2, 0.7)))
            if 1 <= g.n <= n:
                return g
    if kind == 1:
        while True:
            g = random_graph(rng, n, rng.uniform(0.4, 0.9))
            if find_claw(g) is None:
                return g
    while True:
        g = random_graph(rng, n, rng.uniform(0.1, 0.4))
        if all(not g.adj[u] & g.adj[v] for u, v in g.edges()):
            return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if not g.has_edge(u, v)])


def gen_anchored_claw(seed: int, max_n: int = 13) -> tuple[Graph, int]:
    """Graph ``G`` and vertex ``v`` with ``G - v`` claw-free and ``v`` on an induced claw.

    Half the draws start from a catalog pattern (top as ``v``) and grow it with
    random vertices that keep ``G - v`` claw-free; the rest add ``v`` with
    random neighbors to a random claw-free graph.
    """
    rng = random.Random(seed)
    while True:
        if rng.random() < 0.5:
            g = rng.choice(pattern_catalog()).graph()
            v = 0
        else:
            h = claw_free_graph(rng, rng.randint(3, max_n - 1))
            v = h.n
            p = rng.uniform(0.2, 0.8)
            g = Graph(h.n + 1, h.edges() + [(u, v) for u in range(h.n) if rng.random() < p])
            if find_claw_at(g, v) is None:
                continue
        target = rng.randint(g.n, max_n)
        attempts = 0
        while g.n < target and attempts < 50:
            attempts += 1
            x = g.n
            p = rng.uniform(0.1, 0.7)
            nbrs = [u for u in range(g.n) if rng.random() < p]
            cand = Graph(x + 1, g.edges() + [(u, x) for u in nbrs])
            if find_claw_at(cand, x, cand.full & ~(1 << v)) is None:
                g = cand
        perm = list(range(g.n))
        rng.shuffle(perm)
        return g.relabel(perm), perm[v]
