"""Covering families of vertex sets.

``algorithm_alpha`` builds Farber's family of independent sets for 2K2-free
graphs; ``gamma`` builds a good claw-free family for l-claw-free graphs, i.e.
a polynomial family of vertex sets that each induce a claw-free subgraph and
that jointly contain every maximal independent set.
"""

from __future__ import annotations

from collections.abc import Callable, Iterable, Sequence
from dataclasses import dataclass, field, replace

from lclaw import graph as _graph
from lclaw.graph import (
    Claw,
    EnumerationCapExceeded,
    Graph,
    VertexSet,
    anti_neighborhood,
    extension_stays_claw_free,
    find_claw,
    is_independent,
    iter_bits,
    mask_of,
    maximal_independent_sets,
    to_list,
)
from lclaw.patterns import embedding_member, enumerate_embeddings


class ClassViolation(Exception):
    """The input graph is outside the class the algorithm was asked to handle.

    ``witness`` lists pairwise anti-adjacent claws; for an l-claw-free request
    it has ``l`` entries and certifies that the input is not l-claw-free.
    """

    def __init__(self, message: str, witness: Sequence[Claw] = ()):
        super().__init__(message)
        self.witness = list(witness)


@dataclass(frozen=True)
class Provenance:
    origin: str  # "initial" | "base" | "step2"
    loop: int | None = None
    pattern: int | None = None  # L_k for gamma, None for alpha edges
    image: VertexSet = 0
    extended: tuple[int, ...] = ()

    def describe(self, base: int = 0) -> str:
        ids = lambda xs: ",".join(str(x + base) for x in xs)  # noqa: E731
        parts = [self.origin]
        if self.loop is not None:
            parts.append(f"loop={self.loop}")
        if self.pattern is not None:
            parts.append(f"k={self.pattern}")
        if self.image:
            parts.append("image=" + ids(to_list(self.image)))
        if self.extended:
            parts.append("extended=" + ids(self.extended))
        return " ".join(parts)


@dataclass
class FamilyStats:
    embeddings: int = 0  # deduplicated top-level step-2 embeddings (edges for alpha)
    step2_additions: int = 0  # top-level step-2 candidate members, before dedup
    recursive_calls: int = 0
    memo_hits: int = 0


@dataclass
class Family:
    kind: str  # "alpha" | "gamma"
    l: int | None
    scope: VertexSet
    members: dict[VertexSet, Provenance]
    stats: FamilyStats = field(default_factory=FamilyStats)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, s: object) -> bool:
        return s in self.members

    def sorted_members(self) -> list[VertexSet]:
        return sorted(self.members, key=to_list)


LoopHook = Callable[[int, int, VertexSet, dict], None]


def resolve_ordering(g: Graph, ordering: Sequence[int] | str | None = None) -> list[int]:
    """Turn ``None``/``"input"``/``"degasc"``/``"degdesc"`` or a permutation into a list."""
    if ordering is None or ordering == "input":
        return list(range(g.n))
    if ordering == "degasc":
        return sorted(range(g.n), key=lambda v: (g.degree(v), v))
    if ordering == "degdesc":
        return sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    if isinstance(ordering, str):
        raise ValueError(f"unknown ordering {ordering!r}")
    order = list(ordering)
    if sorted(order) != list(range(g.n)):
        raise ValueError("ordering must be a permutation of the vertices")
    return order


def algorithm_alpha(
    g: Graph, ordering: Sequence[int] | str | None = None, on_loop: LoopHook | None = None
) -> Family:
    """Farber's covering family, built vertex by vertex along ``ordering``.

    For 2K2-free inputs every member is independent and every maximal
    independent set lies in a member; no class check is made here.
    """
    order = resolve_ordering(g, ordering)
    S: dict[VertexSet, Provenance] = {0: Provenance("initial")}
    stats = FamilyStats()
    prefix = 0
    for i, v in enumerate(order, start=1):
        bit = 1 << v
        prefix |= bit
        nv = g.adj[v]
        extended: dict[VertexSet, Provenance] = {}
        for H, prov in S.items():
            if not nv & H:
                H, prov = H | bit, replace(prov, extended=prov.extended + (v,))
            extended.setdefault(H, prov)
        S = extended
        for u in iter_bits(nv & prefix):
            stats.embeddings += 1
            stats.step2_additions += 1
            edge = (1 << u) | bit
            H = bit | anti_neighborhood(g, edge, prefix)
            S.setdefault(H, Provenance("step2", loop=i, image=edge))
        if on_loop is not None:
            on_loop(i, v, prefix, S)
    return Family("alpha", None, g.full, S, stats)


def gamma(
    g: Graph,
    l: int,
    ordering: Sequence[int] | str | None = None,
    on_loop: LoopHook | None = None,
) -> Family:
    """Good claw-free family of an l-claw-free graph.

    A claw-free input yields the single member ``V(G)``. Otherwise vertices are
    added one at a time: each member grows by the new vertex when it stays
    claw-free, and every pattern embedding topped by the new vertex adds its
    white image joined with each member of a recursively computed family
    (one level of l lower) of the embedding's anti-neighborhood.

    Raises ClassViolation when the recursion reaches l = 1 on a graph that
    still has a claw, i.e. the input was not l-claw-free.
    ``on_loop(i, v, prefix, members)`` is called after each top-level loop.
    """
    if l < 1:
        raise ValueError("l must be a positive integer")
    order = resolve_ordering(g, ordering)
    stats = FamilyStats()
    memo: dict[tuple[VertexSet, int], list[VertexSet]] = {}

    def sub_family(scope: VertexSet, level: int) -> list[VertexSet]:
        key = (scope, level)
        if key in memo:
            stats.memo_hits += 1
            return memo[key]
        stats.recursive_calls += 1
        members = list(_gamma(scope, level, order, None, None))
        memo[key] = members
        return members

    def _gamma(scope, level, order, hook, top_stats) -> dict[VertexSet, Provenance]:
        claw = find_claw(g, scope)
        if claw is None:
            return {scope: Provenance("base")}
        if level == 1:
            raise ClassViolation("graph is not claw-free at the innermost level", [claw])
        S: dict[VertexSet, Provenance] = {0: Provenance("initial")}
        prefix = 0
        i = 0
        for v in order:
            bit = 1 << v
            if not scope & bit:
                continue
            i += 1
            prefix |= bit
            # Step 1: grow members that stay claw-free.
            grown: dict[VertexSet, Provenance] = {}
            for H, prov in S.items():
                if extension_stays_claw_free(g, H, v):
                    H, prov = H | bit, replace(prov, extended=prov.extended + (v,))
                    if _graph.DEBUG:
                        assert find_claw(g, H) is None
                grown.setdefault(H, prov)
            S = grown
            # Step 2: patterns topped by v inside G_i.
            for e in enumerate_embeddings(g, prefix, v):
                white, anti = embedding_member(g, prefix, e)
                try:
                    fam = sub_family(anti, level - 1)
                except ClassViolation as exc:
                    outer = find_claw(g, e.image)
                    raise ClassViolation(
                        f"input is not {level}-claw-free", [outer, *exc.witness]
                    ) from None
                if top_stats is not None:
                    top_stats.embeddings += 1
                    top_stats.step2_additions += len(fam)
                prov = Provenance("step2", loop=i, pattern=e.k, image=e.image)
                for F in fam:
                    if _graph.DEBUG:
                        assert is_independent(g, white) and not anti_neighborhood(g, white, F) ^ F
                    S.setdefault(white | F, prov)
            if hook is not None:
                hook(i, v, prefix, S)
        return S

    members = _gamma(g.full, l, order, on_loop, stats)
    return Family("gamma", l, g.full, members, stats)


def gamma2(g: Graph, ordering: Sequence[int] | str | None = None, on_loop: LoopHook | None = None) -> Family:
    return gamma(g, 2, ordering, on_loop)


@dataclass
class Report:
    """Outcome of checking a family against the good-family conditions.

    ``members_ok`` is claw-freeness for gamma families and independence for
    alpha families. ``covered`` is None when the maximal independent set oracle
    hit its cap; such a report is "unverified", never a pass.
    """

    kind: str
    members_ok: bool
    bad_member: VertexSet | None
    bad_member_witness: object
    covered: bool | None
    uncovered: VertexSet | None
    maximal_sets: int | None
    member_count: int
    count_cap: int

    @property
    def count_ok(self) -> bool:
        return self.member_count <= self.count_cap

    @property
    def status(self) -> str:
        if not self.members_ok or self.covered is False or not self.count_ok:
            return "fail"
        if self.covered is None:
            return "unverified"
        return "pass"

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def lines(self) -> list[str]:
        what = "independent" if self.kind == "alpha" else "claw-free"
        out = [f"(i) every member {what}: {'yes' if self.members_ok else 'NO'}"]
        if not self.members_ok:
            out.append(f"    member {to_list(self.bad_member or 0)} witness {self.bad_member_witness}")
        if self.covered is None:
            out.append("(ii) maximal independent sets covered: UNVERIFIED (oracle cap)")
        else:
            out.append(
                f"(ii) all {self.maximal_sets} maximal independent sets covered: "
                f"{'yes' if self.covered else 'NO'}"
            )
            if not self.covered:
                out.append(f"    uncovered {to_list(self.uncovered or 0)}")
        out.append(
            f"(iii) members {self.member_count} <= cap {self.count_cap}: "
            f"{'yes' if self.count_ok else 'NO'}"
        )
        out.append(f"status: {self.status}")
        return out


def count_cap(g: Graph, fam: Family) -> int:
    if fam.kind == "alpha":
        return 1 + g.m
    if fam.l == 2:
        return 1 + fam.stats.embeddings
    return 1 + fam.stats.step2_additions


def verify_good_family(
    g: Graph, fam: Family | Iterable[VertexSet], kind: str | None = None, mis_cap: int = 200_000
) -> Report:
    """Check (i) member shape, (ii) coverage of maximal independent sets, (iii) size cap.

    A bare iterable of member masks is treated as a gamma family with no
    structural cap beyond its own size.
    """
    if isinstance(fam, Family):
        members = list(fam.members)
        kind = kind or fam.kind
        cap = count_cap(g, fam)
    else:
        members = list(dict.fromkeys(fam))
        kind = kind or "gamma"
        cap = 1 + g.m if kind == "alpha" else len(members)

    members_ok, bad, witness = True, None, None
    for H in members:
        if kind == "alpha":
            if not is_independent(g, H):
                u = next(x for x in iter_bits(H) if g.adj[x] & H)
                members_ok, bad, witness = False, H, (u, next(iter_bits(g.adj[u] & H)))
                break
        else:
            claw = find_claw(g, H)
            if claw is not None:
                members_ok, bad, witness = False, H, claw
                break

    covered: bool | None = True
    uncovered = None
    count: int | None = 0
    try:
        for I in maximal_independent_sets(g, cap=mis_cap):
            count += 1
            if not any(not I & ~H for H in members):
                covered, uncovered = False, I
                break
    except EnumerationCapExceeded:
        covered, count = None, None

    return Report(kind, members_ok, bad, witness, covered, uncovered, count, len(members), cap)


def members_from_lists(lists: Iterable[Iterable[int]]) -> list[VertexSet]:
    return [mask_of(x) for x in lists]
