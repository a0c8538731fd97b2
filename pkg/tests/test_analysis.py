from zomo import analysis
from zomo.group import analyze_presentation, group_from_permutations

HEIS = "<a, b | a^3, b^3, [a,b]^3, [[a,b],a], [[a,b],b]>"
META27 = "<a, b | a^9, b^3, b^-1*a*b*a^-4>"


def test_center_heisenberg():
    G = analyze_presentation(HEIS)
    Z = analysis.center(G)
    assert len(Z.members) == 3
    assert analysis.is_normal(G, Z)


def test_derived_and_frattini_heisenberg():
    G = analyze_presentation(HEIS)
    D = analysis.derived_subgroup(G)
    Phi = analysis.frattini(G)
    assert len(D.members) == 3
    assert D.members == Phi.members
    assert analysis.frattini_by_intersection(G).members == Phi.members


def test_nilpotency_class():
    assert analysis.nilpotency_class(analyze_presentation(HEIS)) == 2
    assert analysis.nilpotency_class(analyze_presentation("<a | a^9>")) == 1


def test_maximal_class_27():
    # for order 27 = 3^3, class 2 is maximal
    assert analysis.is_maximal_class(analyze_presentation(HEIS))
    assert analysis.is_maximal_class(analyze_presentation(META27))


def test_quotient_by_center():
    G = analyze_presentation(HEIS)
    Q, proj = analysis.quotient(G, analysis.center(G))
    assert Q.order == 9
    assert analysis.nilpotency_class(Q) == 1
    assert proj[0] == 0


def test_abelian_invariants():
    G = analyze_presentation("<a, b | a^9, b^3, [a,b]>")
    assert tuple(analysis.abelian_invariants(G)) == (9, 3)


def test_order_census():
    G = analyze_presentation(HEIS)
    census = analysis.order_census(G)
    assert census == {1: 1, 3: 26}


def test_maximal_subgroups_two_generated():
    G = analyze_presentation(HEIS)
    maxes = analysis.maximal_subgroups(G)
    assert len(maxes) == 4
    assert all(len(M.members) == 9 for M in maxes)


def test_minimal_nonabelian_heisenberg_is_itself():
    G = analyze_presentation(HEIS)
    mins = analysis.minimal_nonabelian_subgroups(G)
    assert len(mins) == 1
    assert len(mins[0].members) == 27


def test_metacyclic_detection():
    assert analysis.is_metacyclic(analyze_presentation(META27))
    assert not analysis.is_metacyclic(analyze_presentation(HEIS))


def test_central_quotient_center_pattern_needs_big_center():
    import pytest
    from zomo.group import GroupError
    with pytest.raises(GroupError):
        analysis.central_quotient_center_pattern(analyze_presentation(HEIS))


def test_central_quotient_center_pattern():
    from zomo.catalog import entry_by_id, materialize
    G = materialize(entry_by_id("caseI1_e2_k2"))
    assert sorted(analysis.central_quotient_center_pattern(G),
                  reverse=True) == [9, 3, 3, 3]


def test_fingerprint_separates_the_order27_groups():
    fp1 = analysis.fingerprint(analyze_presentation(HEIS))
    fp2 = analysis.fingerprint(analyze_presentation(META27))
    assert fp1 != fp2
    assert fp1.order == fp2.order == 27


def test_fingerprint_invariant_under_presentation_change():
    # the same group from different generating data
    G1 = analyze_presentation(META27)
    G2 = analyze_presentation(
        "<a, c | a^9, c^3, c^-1*a*c*a^-7>")  # c = b^2, a^c = a^(4^2 mod 9)
    assert analysis.fingerprint(G1) == analysis.fingerprint(G2)


def test_subgroup_closure_and_normal_closure():
    G = analyze_presentation(META27)
    a = G.gens[0]
    H = analysis.subgroup_closure(G, [a])
    assert len(H.members) == 9
    N = analysis.normal_closure(G, [a])
    assert analysis.is_normal(G, N)


def test_regular_representation_faithful():
    G = analyze_presentation(HEIS)
    perms = G.regular_perms()
    H = group_from_permutations([perms[g] for g in G.gens])
    assert H.order == G.order
