import random

import pytest

from lclaw.family import (
    ClassViolation,
    algorithm_alpha,
    gamma,
    gamma2,
    resolve_ordering,
    verify_good_family,
)
from lclaw.graph import (
    Graph,
    anti_neighborhood,
    chair,
    claw,
    complete,
    cycle,
    disjoint_union,
    find_claw,
    is_independent,
    mask_of,
    maximal_independent_sets,
    path,
    to_list,
)
from lclaw.instances import format_family, gen_2k2free_instance, gen_dense_lclaw_instance, parse_family


def members(fam):
    return sorted(to_list(H) for H in fam.members)


# Algorithm Alpha


def test_alpha_c4_trace():
    fam = algorithm_alpha(cycle(4), [0, 1, 2, 3])
    assert members(fam) == [[0, 2], [1, 3], [2], [3]]
    assert len(fam) <= 1 + cycle(4).m


def test_alpha_edgeless_and_k2():
    assert members(algorithm_alpha(Graph(3))) == [[0, 1, 2]]
    assert members(algorithm_alpha(complete(2), [0, 1])) == [[0], [1]]


@pytest.mark.parametrize("seed", range(40))
def test_alpha_on_split_graphs(seed):
    inst = gen_2k2free_instance(seed, 4 + seed % 12)
    g = inst.graph
    order = list(range(g.n))
    random.Random(seed).shuffle(order)
    fam = algorithm_alpha(g, order)
    assert all(is_independent(g, H) for H in fam.members)
    assert len(fam) <= 1 + g.m
    report = verify_good_family(g, fam)
    assert report.passed, report.lines()


def test_alpha_loop_invariant():
    g = gen_2k2free_instance(3, 12).graph

    def check(i, v, prefix, S):
        for I in maximal_independent_sets(g, prefix):
            assert any(not I & ~H for H in S)

    algorithm_alpha(g, on_loop=check)


# Gamma


def test_gamma_claw_free_base():
    for g in (path(6), cycle(5), complete(4), Graph(0)):
        fam = gamma(g, 2)
        assert list(fam.members) == [g.full]
        assert fam.members[g.full].origin == "base"


def test_gamma_claw_plus_isolated():
    g = disjoint_union(claw(), Graph(1))  # center 0, leaves 1-3, u = 4
    fam = gamma(g, 2, [4, 1, 2, 3, 0])
    report = verify_good_family(g, fam)
    assert report.passed, report.lines()
    for target in ([1, 2, 3, 4], [0, 4]):
        assert any(not mask_of(target) & ~H for H in fam.members)


def test_gamma_two_claws_raises():
    g = disjoint_union(claw(), claw())
    with pytest.raises(ClassViolation) as info:
        gamma(g, 2)
    witness = info.value.witness
    assert len(witness) == 2
    a, b = witness
    assert anti_neighborhood(g, a.vertices) & b.vertices == b.vertices


def test_gamma_three_claws_l3_raises_with_full_witness():
    g = disjoint_union(claw(), claw(), claw())
    with pytest.raises(ClassViolation) as info:
        gamma(g, 3)
    assert len(info.value.witness) == 3
    assert len(gamma(disjoint_union(claw(), claw()), 3)) > 0


def test_gamma2_chair():
    fam = gamma2(chair())
    assert verify_good_family(chair(), fam).passed


def test_gamma2_leaves_first():
    fam = gamma2(claw(), [1, 2, 3, 0])
    assert members(fam) == [[0], [1, 2, 3]]


def test_gamma_l1_on_claw_free_is_base():
    assert list(gamma(cycle(6), 1).members) == [cycle(6).full]
    with pytest.raises(ClassViolation):
        gamma(claw(), 1)


def test_ordering_resolution():
    g = Graph(4, [(0, 1), (0, 2), (0, 3), (1, 2)])
    assert resolve_ordering(g) == [0, 1, 2, 3]
    assert resolve_ordering(g, "degasc") == [3, 1, 2, 0]
    assert resolve_ordering(g, "degdesc") == [0, 1, 2, 3]
    with pytest.raises(ValueError):
        resolve_ordering(g, [0, 1, 1, 2])
    with pytest.raises(ValueError):
        resolve_ordering(g, "random")


DENSE = [gen_dense_lclaw_instance(s, 7 + s % 6, 2, p=0.45 + 0.05 * (s % 6)) for s in range(30)]


@pytest.mark.parametrize("inst", DENSE, ids=lambda i: i.name)
def test_ordering_robustness(inst, debug):
    g = inst.graph
    rng = random.Random(inst.name)
    for _ in range(3):
        order = list(range(g.n))
        rng.shuffle(order)
        fam = gamma(g, 2, order)
        report = verify_good_family(g, fam)
        assert report.passed, report.lines()


@pytest.mark.parametrize("inst", DENSE[:12], ids=lambda i: i.name)
def test_gamma_loop_invariant(inst):
    g = inst.graph

    def check(i, v, prefix, S):
        for H in S:
            assert find_claw(g, H) is None
        for I in maximal_independent_sets(g, prefix):
            assert any(not I & ~H for H in S), (i, to_list(I))

    gamma(g, 2, on_loop=check)


@pytest.mark.parametrize("inst", DENSE[:12], ids=lambda i: i.name)
def test_step2_member_shape(inst):
    g = inst.graph
    for H, prov in gamma(g, 2).members.items():
        if prov.origin != "step2":
            continue
        created = H & ~mask_of(prov.extended)
        white, rest = created & prov.image, created & ~prov.image
        assert is_independent(g, white)
        assert anti_neighborhood(g, white, rest) == rest
        assert find_claw(g, H) is None


@pytest.mark.parametrize("seed", range(10))
def test_gamma_l3_dense(seed):
    inst = gen_dense_lclaw_instance(100 + seed, 9 + seed % 4, 3, p=0.35)
    fam = gamma(inst.graph, 3)
    assert verify_good_family(inst.graph, fam).passed


def test_gamma2_count_cap():
    for inst in DENSE:
        fam = gamma2(inst.graph)
        assert len(fam) <= 1 + fam.stats.embeddings


def test_memo_reuse_is_counted():
    fam = gamma(DENSE[5].graph, 3)
    assert fam.stats.recursive_calls > 0


# verifier


def test_verify_examples():
    rep = verify_good_family(cycle(4), algorithm_alpha(cycle(4)))
    assert rep.passed
    rep = verify_good_family(claw(), [mask_of([0])])
    assert rep.status == "fail" and to_list(rep.uncovered) == [1, 2, 3]
    rep = verify_good_family(path(5), [path(5).full])
    assert rep.passed


def test_verify_flags_bad_members():
    rep = verify_good_family(claw(), [claw().full])
    assert not rep.members_ok and rep.bad_member_witness == find_claw(claw())
    rep = verify_good_family(cycle(4), [mask_of([0, 1]), mask_of([2, 3])], kind="alpha")
    assert not rep.members_ok and rep.status == "fail"


def test_verify_reports_unverified_on_cap():
    g = Graph(12, [(2 * i, 2 * i + 1) for i in range(6)])
    rep = verify_good_family(g, [g.full], mis_cap=10)
    assert rep.covered is None and rep.status == "unverified" and not rep.passed


# dump format


def test_family_dump_round_trip():
    g = DENSE[3].graph
    fam = gamma(g, 2)
    text = format_family(fam)
    assert text.startswith("# family gamma l=2\n")
    assert parse_family(text) == fam.sorted_members()
    lines = text.splitlines()[1:]
    assert all(line.startswith("# ") for line in lines[0::2])
    for line in lines[1::2]:
        ids = [int(x) for x in line.split()]
        assert ids == sorted(ids)


def test_alpha_dump_has_edge_provenance():
    text = format_family(algorithm_alpha(cycle(4)))
    assert "# step2 loop=2 image=1,2" in text
    assert parse_family(text) == algorithm_alpha(cycle(4)).sorted_members()
