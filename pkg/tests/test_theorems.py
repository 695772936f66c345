import random
from fractions import Fraction

import pytest

from grundytd import (
    DomainError,
    InvariantViolation,
    PairLabeling,
    PreconditionError,
    bound_report,
    build_family,
    complete_multipartite_parts,
    cycle,
    family_t_members,
    find_pair_labeling,
    grundy_total_domination_number,
    is_complete_multipartite,
    is_in_family_t,
    is_total_dominating_sequence,
    k_kk,
    pair_labeling_from_sequence,
    path,
    petersen,
    random_tree,
    regular_greedy_sequence,
    replay_family_t_certificate,
    star,
    complete,
    structural_report,
    tree_bound_report,
    tree_from_edges,
    tree_matching_sequence,
    tree_perfect_matching,
    verify_pair_labeling,
)


# ---------- pair labelings (full-order sequences) ----------


def test_p4_has_pair_labeling():
    lab = find_pair_labeling(path(4))
    assert lab is not None and lab.k == 2
    assert verify_pair_labeling(path(4), lab)
    # the x side is an independent set covering one end of each pair
    edge = lab.xs[0] in (1, 2) and lab.xs[1] in (1, 2)
    assert not edge


def test_c4_has_no_pair_labeling():
    assert grundy_total_domination_number(cycle(4))[0] == 2
    assert find_pair_labeling(cycle(4)) is None


def test_odd_order_never_labeled():
    assert find_pair_labeling(path(5)) is None


def test_labeling_witness_sequence_is_total_dominating():
    lab = find_pair_labeling(path(6))
    assert lab is not None
    assert is_total_dominating_sequence(path(6), lab.sequence)
    assert len(lab.sequence) == 6


def test_peeling_recovers_labeling_from_witness():
    g = path(6)
    value, witness = grundy_total_domination_number(g)
    assert value == 6
    lab = pair_labeling_from_sequence(g, witness)
    assert verify_pair_labeling(g, lab)


def test_peeling_rejects_short_sequence():
    with pytest.raises(PreconditionError):
        pair_labeling_from_sequence(path(4), (0, 2))


def test_verify_rejects_dependent_x_side():
    # swap roles so the "independent" side has an edge
    bad = PairLabeling(k=2, xs=(1, 2), ys=(0, 3), sequence=(1, 2, 3, 0))
    assert not verify_pair_labeling(path(4), bad)


# ---------- complete multipartite recognition ----------


def test_k23_is_complete_multipartite():
    g = build_family("complete_multipartite:2,3")
    parts = complete_multipartite_parts(g)
    assert parts is not None
    assert sorted(len(p) for p in parts) == [2, 3]


def test_k3_is_complete_multipartite_with_unit_parts():
    parts = complete_multipartite_parts(complete(3))
    assert parts is not None and len(parts) == 3


def test_p4_is_not_complete_multipartite():
    assert not is_complete_multipartite(path(4))


def test_value_two_iff_multipartite_small(connected_upto_6):
    for g in connected_upto_6:
        expected = grundy_total_domination_number(g)[0] == 2
        assert is_complete_multipartite(g) == expected


# ---------- tree perfect matchings and witness sequences ----------


def test_p2_matching_sequence():
    assert tree_matching_sequence(path(2)) == (1, 0)


def test_p6_matching_sequence_is_full_length():
    seq = tree_matching_sequence(path(6))
    assert len(seq) == 6
    assert is_total_dominating_sequence(path(6), seq)


def test_tree_without_perfect_matching():
    assert tree_perfect_matching(star(2)) is None
    with pytest.raises(PreconditionError):
        tree_matching_sequence(star(2))


def test_perfect_matching_found_on_even_path():
    m = tree_perfect_matching(path(8))
    assert m is not None
    assert sorted(x for e in m for x in e) == list(range(8))


def test_matching_sequence_rejects_non_tree():
    with pytest.raises(DomainError):
        tree_matching_sequence(cycle(4))


# ---------- the extremal tree family ----------


def test_family_member_counts():
    assert [len(family_t_members(n)) for n in (2, 5, 8, 11)] == [1, 1, 1, 2]


def test_family_empty_off_residue():
    assert family_t_members(7) == []
    assert is_in_family_t(path(7)) is None


def test_p5_in_family():
    cert = is_in_family_t(path(5))
    assert cert is not None
    replayed = replay_family_t_certificate(cert)
    from grundytd import are_isomorphic

    assert are_isomorphic(replayed, path(5))


def test_p8_not_in_family():
    assert is_in_family_t(path(8)) is None


def test_certificates_replay_to_members():
    from grundytd import are_isomorphic

    for n in (5, 8, 11):
        for tree, cert in family_t_members(n):
            assert are_isomorphic(replay_family_t_certificate(cert), tree)
            assert is_in_family_t(tree) is not None


# ---------- tree lower bound ----------


def test_bound_skips_trees_with_strong_support():
    rep = tree_bound_report(star(3))
    assert not rep.applicable


def test_p5_meets_bound_with_equality():
    rep = tree_bound_report(path(5))
    assert rep.applicable
    assert rep.bound == Fraction(4)
    assert rep.gamma_grt == 4
    assert rep.equality
    assert rep.certificate is not None


def test_p7_strict_above_bound():
    rep = tree_bound_report(path(7))
    assert rep.applicable
    assert rep.bound == Fraction(16, 3)
    assert rep.gamma_grt == 6
    assert not rep.equality


def test_random_trees_obey_bound():
    rng = random.Random(20)
    for _ in range(60):
        t = random_tree(rng.randint(4, 12), rng)
        rep = tree_bound_report(t)
        if not rep.applicable:
            continue
        assert Fraction(rep.gamma_grt) >= rep.bound
        member = is_in_family_t(t) is not None
        assert (Fraction(rep.gamma_grt) == rep.bound) == member


# ---------- regular construction ----------


def test_construction_rejects_unsuitable_graphs():
    with pytest.raises(DomainError):
        regular_greedy_sequence(path(4))  # not regular
    with pytest.raises(DomainError):
        regular_greedy_sequence(k_kk(3))  # the excluded balanced bipartite case
    with pytest.raises(DomainError):
        regular_greedy_sequence(cycle(6))  # degree 2 is out of scope


def test_petersen_construction():
    res = regular_greedy_sequence(petersen())
    assert res.k == 3 and not res.bipartite
    assert res.meets_bound
    assert len(res.sequence) >= 5
    assert is_total_dominating_sequence(petersen(), res.sequence)


def test_bipartite_cubic_construction():
    g = build_family("gm:4")
    res = regular_greedy_sequence(g)
    assert res.bipartite
    assert res.meets_bound
    assert is_total_dominating_sequence(g, res.sequence)


def test_construction_bound_value():
    res = regular_greedy_sequence(petersen())
    # n=10, k=3: ceil(k/2) = 2, so (10 + 2 - 2) / 2 = 5
    assert res.bound == Fraction(5)
    assert len(res.sequence) >= 5


# ---------- bound report ----------


def test_bound_report_clean_on_small_connected(connected_upto_6):
    for g in connected_upto_6:
        assert bound_report(g).violations == ()


def test_bound_report_names_the_checks():
    rep = bound_report(petersen())
    names = {c.name for c in rep.checks}
    assert "gamma_t <= Gamma_t" in names
    assert "gamma_grt <= 2*gamma_gr" in names
    assert "regular: n/(k-1) <= gamma_grt" in names
    assert rep.violations == ()


def test_balanced_bipartite_equality_case():
    # the only connected graphs hitting the n over max-degree floor
    g = k_kk(4)
    rep = bound_report(g)
    assert rep.violations == ()
    assert grundy_total_domination_number(g)[0] == 2
