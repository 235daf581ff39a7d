"""Top-level MWIS solvers for l-claw-free and 2K2-free graphs."""

from __future__ import annotations

from collections.abc import Callable, Sequence

from lclaw.clawfree import EMPTY, Solution, Weights, check_weights, mwis_clawfree, positive_part, weight_of
from lclaw.family import ClassViolation, algorithm_alpha, gamma
from lclaw.graph import Graph, VertexSet, anti_neighborhood, claw_packing, find_induced_2k2, to_list

# Up-front class checks are skipped above this many vertices unless forced.
CHECK_LIMIT = 30

SubSolver = Callable[[Graph, VertexSet, Weights], Solution]


def _better(a: Solution, b: Solution) -> bool:
    """Whether ``a`` beats ``b``: heavier, or equally heavy and lexicographically smaller."""
    if a.weight != b.weight:
        return a.weight > b.weight
    return to_list(a.vertices) < to_list(b.vertices)


def detect_claw_packing(g: Graph, cap: int = 4) -> int:
    """Largest number (at most ``cap``) of pairwise anti-adjacent induced claws."""
    return len(claw_packing(g, cap))


def check_lclaw_free(g: Graph, l: int) -> None:
    packing = claw_packing(g, l)
    if len(packing) >= l:
        raise ClassViolation(f"graph contains {l} pairwise anti-adjacent claws", packing)


def mwis_lclaw(
    g: Graph,
    w: Weights,
    l: int,
    ordering: Sequence[int] | str | None = None,
    solver: str = "auto",
    check_class: bool | None = None,
) -> Solution:
    """Maximum weight independent set of an l-claw-free graph.

    Builds a good claw-free family and solves every member exactly with the
    claw-free ladder; the best member solution is optimal because every
    maximal independent set lies inside some member.
    """
    check_weights(g, w)
    if check_class is None:
        check_class = g.n <= CHECK_LIMIT
    if check_class:
        check_lclaw_free(g, l)
    fam = gamma(g, l, ordering)
    best = EMPTY
    for H in fam.members:
        sol = mwis_clawfree(g, H, w, solver)
        if _better(sol, best):
            best = sol
    return best


def mwis_2k2free(
    g: Graph, w: Weights, ordering: Sequence[int] | str | None = None, check_class: bool | None = None
) -> Solution:
    """MWIS of a 2K2-free graph from Farber's family; members are independent."""
    check_weights(g, w)
    if check_class is None:
        check_class = g.n <= CHECK_LIMIT
    if check_class:
        pair = find_induced_2k2(g)
        if pair is not None:
            raise ClassViolation(f"graph contains an induced 2K2 {pair}", pair)
    best = EMPTY
    for H in algorithm_alpha(g, ordering).members:
        S = positive_part(w, H)
        sol = Solution(S, weight_of(w, S))
        if _better(sol, best):
            best = sol
    return best


def lift_by_isolated_vertex(subsolver: SubSolver, g: Graph, w: Weights) -> Solution:
    """max over v of w(v) + subsolver on the anti-neighborhood of v.

    Errors raised by the subsolver get a ``pivot`` attribute naming ``v``.
    """
    check_weights(g, w)
    best = EMPTY
    for v in range(g.n):
        try:
            sub = subsolver(g, anti_neighborhood(g, 1 << v), w)
        except Exception as exc:
            exc.pivot = v  # type: ignore[attr-defined]
            raise
        cand = Solution(sub.vertices | (1 << v), sub.weight + w[v])
        if cand.weight > 0 and _better(cand, best):
            best = cand
    return best
